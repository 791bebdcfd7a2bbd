#include "strata/errors.hpp"
#include "strata/io.hpp"
#include "strata/oracle.hpp"

#include "support/random.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace strata;

namespace {

io::ResultDocument full_document(const io::PointFile& f) {
    io::ResultDocument doc = io::make_document("contours", f);
    const Triangulation t = delaunay(f.points);
    const DepthLabels d = delaunay_depths(t);
    doc.depths["delaunay"] = d.depth;
    doc.set_depth = d.set_depth;
    doc.layers = layers(t, d);
    const LevelSet ls = depth_contours(t, d);
    doc.contours = io::contour_records(ls);
    doc.medians = io::point_records(medians(ls));
    doc.query = io::QueryRecord{{"0.5", "0.5"}, "contours", classify(ls, {0.5, 0.5}).level, std::nullopt};
    return doc;
}

} // namespace

TEST(PointFile, ParsesAndKeepsText) {
    const auto f = io::parse_point_file("# header\n\n0,0\n 1.50 , -2e3 \r\n+3,4\n# tail");
    ASSERT_EQ(f.points.size(), 3u);
    EXPECT_EQ(f.points[1], (Point{1.5, -2000.0}));
    EXPECT_EQ(f.points[2], (Point{3, 4}));
    EXPECT_EQ(f.text[1][0], "1.50");
    EXPECT_EQ(f.text[1][1], "-2e3");
    EXPECT_EQ(f.lines, (std::vector<std::size_t>{3, 4, 5}));
    EXPECT_EQ(f.checksum, io::fnv1a64("# header\n\n0,0\n 1.50 , -2e3 \r\n+3,4\n# tail"));
}

TEST(PointFile, Errors) {
    try {
        io::parse_point_file("0,0\n1,1\n2;2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    try {
        io::parse_point_file("# pts\n0,0\n1,1\n\n0,0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(io::parse_point_file(""), ParseError);
    EXPECT_THROW(io::parse_point_file("# only a comment\n"), ParseError);
    EXPECT_THROW(io::parse_point_file("1,2,3\n"), ParseError);
    EXPECT_THROW(io::parse_point_file("nan,1\n"), ParseError);
    EXPECT_THROW(io::parse_point_file("1e999,1\n"), ParseError);
    EXPECT_THROW(io::parse_point_file("1,\n"), ParseError);
    EXPECT_THROW(io::parse_point_file("0x10,1\n"), ParseError);
}

TEST(PointFile, WriteRoundTripsExactly) {
    std::mt19937_64 rng(2);
    const auto pts = test::uniform_points(rng, 200, -1e6, 1e6);
    const auto f = io::parse_point_file(io::write_point_file(pts, "uniform"));
    ASSERT_EQ(f.points.size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(f.points[i], pts[i]);
}

TEST(Checksum, KnownVectors) {
    EXPECT_EQ(io::fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(io::fnv1a64("a"), 0xaf63dc4c8601ec8cull);
    EXPECT_EQ(io::fnv1a64("foobar"), 0x85944171f73967e8ull);
}

TEST(Round12, Examples) {
    EXPECT_EQ(io::round12(1.0 / 3.0), 0.333333333333);
    EXPECT_EQ(io::round12(123456789.123456789), 123456789.123);
    EXPECT_EQ(io::round12(-0.0), 0.0);
    EXPECT_EQ(io::round12(io::round12(2.718281828459045)), io::round12(2.718281828459045));
}

TEST(ResultDocument, RoundTripOnRandomSets) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = test::uniform_points(rng, 20 + 15 * trial);
        const auto f = io::parse_point_file(io::write_point_file(pts));
        const io::ResultDocument doc = full_document(f);
        const std::string text = io::emit(doc);
        const io::ResultDocument back = io::parse_document(text);
        EXPECT_EQ(back, doc);
        EXPECT_EQ(io::emit(back), text);
    }
}

TEST(ResultDocument, MinimalSectionsAndErrors) {
    const auto f = io::parse_point_file("0,0\n1,0\n0,1\n");
    io::ResultDocument doc = io::make_document("depth", f);
    doc.depths["tukey"] = {1, 1, 1};
    doc.set_depth = 1;
    const std::string text = io::emit(doc);
    EXPECT_EQ(io::parse_document(text), doc);
    EXPECT_NE(text.find("\"checksum\": \"fnv1a64:"), std::string::npos);
    EXPECT_EQ(text.find("layers"), std::string::npos);

    EXPECT_THROW(io::parse_document("{"), ParseError);
    EXPECT_THROW(io::parse_document("[]"), ParseError);
    EXPECT_THROW(io::parse_document(R"({"format":"other","version":1})"), ParseError);
    std::string bad = text;
    bad.replace(bad.find("fnv1a64:"), 8, "md5:xxxx");
    EXPECT_THROW(io::parse_document(bad), ParseError);
}

TEST(Svg, DeterministicAndComplete) {
    const auto [s, p] = nested_triangle_gadget(4);
    const Triangulation t = delaunay(s);
    const DepthLabels d = delaunay_depths(t);
    const auto lay = layers(t, d);
    const LevelSet ls = depth_contours(t, d);
    const std::string a = io::render_svg(s, d, lay, ls);
    EXPECT_EQ(a, io::render_svg(s, d, lay, ls));
    EXPECT_EQ(a.rfind("<?xml", 0), 0u);
    EXPECT_NE(a.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
    EXPECT_NE(a.find(" A"), std::string::npos);
    EXPECT_NE(a.find("<line"), std::string::npos);
    EXPECT_EQ(a.substr(a.size() - 7), "</svg>\n");
    std::size_t circles = 0;
    for (auto pos = a.find("<circle"); pos != std::string::npos; pos = a.find("<circle", pos + 1)) ++circles;
    EXPECT_EQ(circles, s.size());

    const std::string no_layers = io::render_svg(s, d, lay, ls, {true, false, 800.0});
    EXPECT_EQ(no_layers.find("<line"), std::string::npos);
    const std::string no_levels = io::render_svg(s, d, lay, ls, {false, true, 800.0});
    EXPECT_EQ(no_levels.find("<path"), std::string::npos);
}
