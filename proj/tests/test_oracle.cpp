#include "strata/depth.hpp"
#include "strata/errors.hpp"
#include "strata/oracle.hpp"
#include "strata/query.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace strata;

TEST(NaiveDelaunay, Examples) {
    const PointSet sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    EXPECT_EQ(test::edge_set(naive_delaunay(sq)), test::edge_set(delaunay(sq)));
    EXPECT_EQ(naive_delaunay(sq).triangles().size(), 4u);

    const Triangulation tri = naive_delaunay(PointSet({{0, 0}, {2, 0}, {1, 2}}));
    ASSERT_EQ(tri.triangles().size(), 1u);
    EXPECT_EQ(tri.hull().size(), 3u);

    EXPECT_THROW(naive_delaunay(PointSet({{0, 0}, {4, 0}, {4, 4}, {0, 4}})), DegenerateInput);
    EXPECT_THROW(naive_delaunay(PointSet({{0, 0}, {1, 0}, {2, 0}})), DegenerateInput);
    EXPECT_THROW(naive_delaunay(PointSet({{0, 0}, {1, 0}})), SizeError);
}

TEST(SampledLevelField, SquareWithCenter) {
    const PointSet sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    const LevelField f = sampled_level_field(sq, {50, 50, 0.1});
    ASSERT_EQ(f.level.size(), 2500u);
    for (std::size_t iy = 0; iy < 50; ++iy)
        for (std::size_t ix = 0; ix < 50; ++ix) {
            const double x = f.xs[ix], y = f.ys[iy];
            const bool inside = x > 0 && x < 4 && y > 0 && y < 4;
            EXPECT_EQ(f.at(ix, iy), inside ? 2 : 1) << x << "," << y;
        }
}

TEST(SampledLevelField, ConvexPosition) {
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i) pts.push_back({std::cos(i * 0.7), std::sin(i * 0.7)});
    const PointSet s(pts);
    const LevelField f = sampled_level_field(s, {30, 30, 0.2});
    for (std::size_t iy = 0; iy < 30; ++iy)
        for (std::size_t ix = 0; ix < 30; ++ix) {
            const Point p{f.xs[ix], f.ys[iy]};
            // Depth 2 exactly on the open hull interior.
            bool inside = true;
            const auto h = convex_hull(s);
            for (std::size_t k = 0; k < h.size(); ++k)
                inside = inside && orient(s[h[k]], s[h[(k + 1) % h.size()]], p) == Sign::Positive;
            EXPECT_EQ(f.at(ix, iy), inside ? 2 : 1);
        }
    // Margin cells lie outside the hull.
    EXPECT_EQ(f.at(0, 0), 1);
    EXPECT_EQ(f.at(29, 29), 1);
}

TEST(ElementUniquenessGadget, Construction) {
    const std::vector<double> a{1, 2, 3};
    const PointSet s = element_uniqueness_gadget(a);
    EXPECT_EQ(s.size(), 12u);
    for (const Point& p : s) EXPECT_TRUE(p.x == 0 || p.y == 0);
    EXPECT_TRUE(s.find({-3, 0}).has_value());
    EXPECT_TRUE(s.find({0, -2}).has_value());

    const std::vector<double> dup{1, 1};
    EXPECT_EQ(element_uniqueness_gadget(dup).size(), 4u);
    const std::vector<double> bad{1, -2};
    EXPECT_THROW(element_uniqueness_gadget(bad), DomainError);
    const std::vector<double> zero{0};
    EXPECT_THROW(element_uniqueness_gadget(zero), DomainError);
}

TEST(NestedTriangleGadget, SetDepthAndCollapse) {
    for (int k = 2; k <= 12; ++k) {
        auto [s, p] = nested_triangle_gadget(k);
        EXPECT_EQ(s.size(), std::size_t(3 * k));
        EXPECT_EQ(delaunay_depths(s).set_depth, k);
        // p is outside the hull.
        EXPECT_EQ(query_depth(s, p), 1);
    }
    auto [s4, p4] = nested_triangle_gadget(4);
    EXPECT_EQ(delaunay_depths(s4.with(p4)).set_depth, 3);
    EXPECT_THROW(nested_triangle_gadget(1), RangeError);
}

TEST(NestedTriangleGadget, InsertionPointLiesInInnerCircumcircle) {
    for (int k = 2; k <= 12; ++k) {
        auto [s, p] = nested_triangle_gadget(k);
        // The first three points form the innermost triangle.
        EXPECT_EQ(in_circle(s[1], s[2], s[0], p), Sign::Positive);
        EXPECT_EQ(in_circle(s[1], s[2], s[0], s[3 * k - 1]), Sign::Negative);
    }
}

TEST(ComponentExtremalGadget, ComponentsMeetTheBound) {
    for (int k = 1; k <= 20; ++k) {
        const PointSet s = component_extremal_gadget(k);
        ASSERT_EQ(s.size(), std::size_t(2 * k + 2));
        const Triangulation t = delaunay(s);
        const DepthLabels d = delaunay_depths(t);
        EXPECT_EQ(d.set_depth, 2);
        const std::size_t c = component_count(layers(t, d));
        EXPECT_EQ(c, std::size_t(k + 1));
        EXPECT_EQ(c, component_bound(s.size(), d.set_depth));
    }
    EXPECT_THROW(component_extremal_gadget(0), RangeError);
}
