#include "strata/cli.hpp"

#include "strata/alt_depth.hpp"
#include "strata/contours.hpp"
#include "strata/depth.hpp"
#include "strata/errors.hpp"
#include "strata/io.hpp"
#include "strata/oracle.hpp"
#include "strata/query.hpp"
#include "strata/verify.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace strata::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot read " + path, 0);
    buf << file.rdbuf();
    return buf.str();
}

io::PointFile load(const std::string& path, std::istream& in) { return io::parse_point_file(read_input(path, in)); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    return out;
}

double parse_number(const std::string& s) {
    double v = 0.0;
    const char* first = s.data() + (s.starts_with('+') ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("invalid number \"" + s + "\"", 0);
    return v;
}

int parse_int(const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("invalid integer \"" + s + "\"", 0);
    return v;
}

struct Options {
    std::string file = "-";
    std::string method = "delaunay";
    std::string point;
    std::string via = "insert";
    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    std::string out_path;
    bool levels = false;
    bool layers = false;
};

int cmd_depth(const Options& o, std::istream& in, std::ostream& out) {
    const io::PointFile f = load(o.file, in);
    io::ResultDocument doc = io::make_document("depth", f);
    std::vector<int> depth;
    if (o.method == "delaunay") {
        depth = delaunay_depths(f.points).depth;
    } else if (o.method == "convex") {
        depth = convex_depths(f.points).depth;
    } else {
        for (const Point& p : f.points) depth.push_back(tukey_depth(f.points, p).depth);
    }
    doc.set_depth = *std::max_element(depth.begin(), depth.end());
    doc.depths[o.method] = std::move(depth);
    out << io::emit(doc);
    return kOk;
}

int cmd_layers(const Options& o, std::istream& in, std::ostream& out) {
    const io::PointFile f = load(o.file, in);
    io::ResultDocument doc = io::make_document("layers", f);
    const DepthLabels d = delaunay_depths(f.points);
    doc.depths["delaunay"] = d.depth;
    doc.set_depth = d.set_depth;
    if (f.points.size() >= 3 && !all_collinear(f.points.points())) {
        const Triangulation t = delaunay(f.points);
        doc.layers = layers(t, d);
    } else {
        Layer only;
        only.index = 1;
        for (VertexId v = 0; v < f.points.size(); ++v) only.vertices.push_back(v);
        doc.layers = std::vector<Layer>{only};
    }
    out << io::emit(doc);
    return kOk;
}

int cmd_contours(const Options& o, std::istream& in, std::ostream& out) {
    const io::PointFile f = load(o.file, in);
    io::ResultDocument doc = io::make_document("contours", f);
    const DepthLabels d = delaunay_depths(f.points);
    doc.depths["delaunay"] = d.depth;
    doc.set_depth = d.set_depth;
    const LevelSet ls = depth_contours(f.points);
    doc.contours = io::contour_records(ls);
    doc.medians = io::point_records(medians(ls));
    out << io::emit(doc);
    return kOk;
}

int cmd_query(const Options& o, std::istream& in, std::ostream& out) {
    const auto xy = split(o.point, ',');
    if (xy.size() != 2) throw ParseError("--point expects X,Y", 0);
    const Point p{parse_number(xy[0]), parse_number(xy[1])};
    const io::PointFile f = load(o.file, in);
    io::ResultDocument doc = io::make_document("query", f);
    io::QueryRecord q{{xy[0], xy[1]}, o.via, 1, std::nullopt};
    if (o.via == "insert") {
        q.level = query_depth(f.points, p);
    } else {
        const Classification c = classify(depth_contours(f.points), p);
        q.level = c.level;
        q.alternative = c.alternative;
    }
    doc.query = q;
    out << io::emit(doc);
    return kOk;
}

int cmd_compare(const Options& o, std::istream& in, std::ostream& out) {
    const io::PointFile f = load(o.file, in);
    const DepthLabels d = delaunay_depths(f.points);
    const ConvexDepthLabels c = convex_depths(f.points);
    out << "index\tx\ty\tdelaunay\tconvex\ttukey\n";
    for (VertexId i = 0; i < f.points.size(); ++i) {
        out << i << '\t' << f.text[i][0] << '\t' << f.text[i][1] << '\t' << d.depth[i] << '\t' << c.depth[i] << '\t'
            << tukey_depth(f.points, f.points[i]).depth << '\n';
    }
    return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
    std::string joined;
    for (const auto& p : o.params) joined += (joined.empty() ? "" : " ") + p;
    const std::string comment = o.kind + (joined.empty() ? "" : " " + joined);
    auto single = [&]() {
        if (o.params.size() != 1) throw ParseError(o.kind + " expects one integer parameter", 0);
        return parse_int(o.params[0]);
    };
    if (o.kind == "element_uniqueness") {
        std::vector<double> values;
        for (const auto& p : o.params)
            for (const auto& v : split(p, ',')) values.push_back(parse_number(v));
        const PointSet s = element_uniqueness_gadget(values);
        out << io::write_point_file(s.points(), comment);
    } else if (o.kind == "nested_triangle") {
        const auto [s, p] = nested_triangle_gadget(single());
        char buf[96];
        std::snprintf(buf, sizeof buf, "; collapse point %.17g,%.17g", p.x, p.y);
        out << io::write_point_file(s.points(), comment + buf);
    } else if (o.kind == "component_extremal") {
        out << io::write_point_file(component_extremal_gadget(single()).points(), comment);
    } else if (o.kind == "uniform") {
        const int n = single();
        if (n < 1) throw RangeError("uniform expects at least one point");
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
            const double x = u(rng);
            pts.push_back({x, u(rng)});
        }
        out << io::write_point_file(pts, comment + " seed " + std::to_string(o.seed));
    } else {
        throw ParseError("unknown generator \"" + o.kind + "\"", 0);
    }
    return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const io::PointFile f = load(o.file, in);
    bool ok = true;
    for (const CheckResult& r : verify_point_set(f.points, o.samples)) {
        out << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail << '\n';
        ok = ok && r.passed;
    }
    return ok ? kOk : kInvariantViolation;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
    const io::PointFile f = load(o.file, in);
    const DepthLabels d = delaunay_depths(f.points);
    std::vector<Layer> lay;
    if (f.points.size() >= 3 && !all_collinear(f.points.points())) lay = layers(delaunay(f.points), d);
    // With neither flag, draw everything.
    const bool both = !o.levels && !o.layers;
    const std::string svg = io::render_svg(f.points, d, lay, depth_contours(f.points),
                                           {both || o.levels, both || o.layers, 800.0});
    if (o.out_path.empty() || o.out_path == "-") {
        out << svg;
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file || !(file << svg)) throw Error("cannot write " + o.out_path);
    }
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Delaunay depth layers, contours and queries", "strata"};
    app.require_subcommand(1);
    Options o;

    auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "point file, - for standard input")->required(); };

    auto* depth = app.add_subcommand("depth", "per-point depths");
    file_arg(depth);
    depth->add_option("--method", o.method, "depth notion")->check(CLI::IsMember({"delaunay", "convex", "tukey"}));

    auto* lay = app.add_subcommand("layers", "Delaunay layers with components and cycles");
    file_arg(lay);

    auto* cont = app.add_subcommand("contours", "depth contours and medians");
    file_arg(cont);

    auto* query = app.add_subcommand("query", "level of one point");
    file_arg(query);
    query->add_option("--point", o.point, "X,Y")->required();
    query->add_option("--via", o.via, "evaluation path")->check(CLI::IsMember({"insert", "contours"}));

    auto* compare = app.add_subcommand("compare", "Delaunay, convex and Tukey depth per point");
    file_arg(compare);

    auto* gen = app.add_subcommand("gen", "write a generated point file");
    gen->add_option("KIND", o.kind, "element_uniqueness, nested_triangle, component_extremal or uniform")
        ->required();
    gen->add_option("PARAMS", o.params, "generator parameters");
    gen->add_option("--seed", o.seed, "seed for uniform");

    auto* verify = app.add_subcommand("verify", "run the invariant checks");
    file_arg(verify);
    verify->add_option("--samples", o.samples, "number of grid samples");

    auto* render = app.add_subcommand("render", "SVG drawing");
    file_arg(render);
    render->add_option("--out", o.out_path, "output path, standard output if omitted");
    render->add_flag("--levels", o.levels, "draw depth contours");
    render->add_flag("--layers", o.layers, "draw layer edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (depth->parsed()) return cmd_depth(o, in, out);
        if (lay->parsed()) return cmd_layers(o, in, out);
        if (cont->parsed()) return cmd_contours(o, in, out);
        if (query->parsed()) return cmd_query(o, in, out);
        if (compare->parsed()) return cmd_compare(o, in, out);
        if (gen->parsed()) return cmd_gen(o, out);
        if (verify->parsed()) return cmd_verify(o, in, out);
        if (render->parsed()) return cmd_render(o, in, out);
    } catch (const ParseError& e) {
        err << "strata: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "strata: " << e.what() << '\n';
        return kDegenerateInput;
    }
    return kInputError;
}

} // namespace strata::cli
