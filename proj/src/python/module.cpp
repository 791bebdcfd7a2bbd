#include "strata/alt_depth.hpp"
#include "strata/cli.hpp"
#include "strata/contours.hpp"
#include "strata/depth.hpp"
#include "strata/errors.hpp"
#include "strata/io.hpp"
#include "strata/oracle.hpp"
#include "strata/query.hpp"
#include "strata/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace strata;

namespace {

PointSet to_point_set(const std::vector<std::pair<double, double>>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return PointSet(std::move(out));
}

std::vector<std::pair<double, double>> to_pairs(std::span<const Point> pts) {
    std::vector<std::pair<double, double>> out;
    for (const Point& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

py::dict layer_dict(const Layer& l) {
    py::list edges;
    for (const Edge& e : l.edges) edges.append(py::make_tuple(e.a, e.b));
    py::dict d;
    d["index"] = l.index;
    d["vertices"] = l.vertices;
    d["edges"] = edges;
    d["components"] = l.components;
    d["cycles"] = l.cycles;
    return d;
}

py::dict arc_dict(const Arc& a) {
    py::dict d;
    d["center"] = py::make_tuple(a.circle.center.x, a.circle.center.y);
    d["radius"] = a.circle.radius;
    d["start"] = a.start_angle;
    d["end"] = a.end_angle;
    d["counterclockwise"] = a.counterclockwise;
    if (a.circle.defining_triple) d["triangle"] = *a.circle.defining_triple;
    return d;
}

std::vector<Layer> layers_of(const PointSet& s) {
    if (s.size() < 3 || all_collinear(s.points())) {
        Layer only;
        only.index = 1;
        for (VertexId v = 0; v < s.size(); ++v) only.vertices.push_back(v);
        return {only};
    }
    const Triangulation t = delaunay(s);
    return layers(t, delaunay_depths(t));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Delaunay depth layers, contours and queries";

    auto base = py::register_exception<Error>(m, "StrataError");
    py::register_exception<DegenerateInput>(m, "DegenerateInputError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<DuplicatePoint>(m, "DuplicatePointError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def(
        "delaunay_depths", [](const std::vector<std::pair<double, double>>& pts) {
            return delaunay_depths(to_point_set(pts)).depth;
        },
        py::arg("points"), "Delaunay depth of every point.");

    m.def(
        "layers", [](const std::vector<std::pair<double, double>>& pts) {
            py::list out;
            for (const Layer& l : layers_of(to_point_set(pts))) out.append(layer_dict(l));
            return out;
        },
        py::arg("points"), "Delaunay layers with edges, components and cycles.");

    m.def(
        "query_depth", [](const std::vector<std::pair<double, double>>& pts, std::pair<double, double> p) {
            return query_depth(to_point_set(pts), {p.first, p.second});
        },
        py::arg("points"), py::arg("point"), "Depth the point gets when inserted into the set.");

    m.def(
        "convex_depths", [](const std::vector<std::pair<double, double>>& pts) {
            return convex_depths(to_point_set(pts)).depth;
        },
        py::arg("points"));

    m.def(
        "tukey_depth", [](const std::vector<std::pair<double, double>>& pts, std::pair<double, double> p) {
            return tukey_depth(to_point_set(pts), {p.first, p.second}).depth;
        },
        py::arg("points"), py::arg("point"));

    py::class_<LevelSet>(m, "LevelSet")
        .def_property_readonly("depth_of_set", [](const LevelSet& ls) { return ls.depth_of_set; })
        .def_property_readonly("level_count", &LevelSet::level_count)
        .def_property_readonly("contours",
                               [](const LevelSet& ls) {
                                   py::list out;
                                   for (const DepthContour& c : ls.contours) {
                                       py::dict d;
                                       d["level"] = c.level;
                                       d["polygon"] = to_pairs(c.polygon);
                                       py::list curves;
                                       for (const ArcCurve& curve : c.curves) {
                                           py::list arcs;
                                           for (const Arc& a : curve) arcs.append(arc_dict(a));
                                           curves.append(arcs);
                                       }
                                       d["curves"] = curves;
                                       out.append(d);
                                   }
                                   return out;
                               })
        .def(
            "classify",
            [](const LevelSet& ls, std::pair<double, double> p) {
                const Classification c = classify(ls, {p.first, p.second});
                return py::make_tuple(c.level, c.alternative ? py::cast(*c.alternative) : py::none());
            },
            py::arg("point"), "Level of a point and, near a contour, the other candidate level.")
        .def("medians", [](const LevelSet& ls) { return to_pairs(medians(ls)); })
        .def("distance", [](const LevelSet& ls, std::pair<double, double> p) {
            return contour_distance(ls, {p.first, p.second});
        });

    m.def(
        "depth_contours", [](const std::vector<std::pair<double, double>>& pts) {
            return depth_contours(to_point_set(pts));
        },
        py::arg("points"), "Depth contours of the set.");

    m.def(
        "element_uniqueness_gadget",
        [](const std::vector<double>& values) { return to_pairs(element_uniqueness_gadget(values).points()); },
        py::arg("values"));
    m.def(
        "nested_triangle_gadget", [](int k) {
            const auto [s, p] = nested_triangle_gadget(k);
            return py::make_tuple(to_pairs(s.points()), py::make_tuple(p.x, p.y));
        },
        py::arg("k"));
    m.def(
        "component_extremal_gadget", [](int k) { return to_pairs(component_extremal_gadget(k).points()); },
        py::arg("k"));

    m.def(
        "verify", [](const std::vector<std::pair<double, double>>& pts, std::size_t samples) {
            py::list out;
            for (const CheckResult& r : verify_point_set(to_point_set(pts), samples))
                out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("points"), py::arg("samples") = 1000);

    m.def(
        "run_cli",
        [](std::vector<std::string> args, const std::string& stdin_text) {
            args.insert(args.begin(), "strata");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            const int status = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command line tool in process.");
}
