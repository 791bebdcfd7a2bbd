#include "strata/verify.hpp"

#include "strata/contours.hpp"
#include "strata/depth.hpp"
#include "strata/io.hpp"
#include "strata/oracle.hpp"
#include "strata/query.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace strata {

namespace {

CheckResult check_delaunay(const Triangulation& t) {
    CheckResult r{"delaunay", true, ""};
    const auto tris = t.triangles();
    std::size_t hull = t.hull().size();
    if (tris.size() != 2 * t.vertex_count() - 2 - hull) {
        r.passed = false;
        r.detail = std::to_string(tris.size()) + " triangles, expected " + std::to_string(2 * t.vertex_count() - 2 - hull);
        return r;
    }
    for (const Triangle& tr : tris) {
        if (orient(t.point(tr[0]), t.point(tr[1]), t.point(tr[2])) != Sign::Positive) {
            r.passed = false;
            r.detail = "triangle not counterclockwise";
            return r;
        }
        for (int k = 0; k < 3; ++k) {
            for (VertexId v : t.neighbors(tr[k])) {
                if (v == tr[0] || v == tr[1] || v == tr[2]) continue;
                if (in_circle(t.point(tr[0]), t.point(tr[1]), t.point(tr[2]), t.point(v)) == Sign::Positive) {
                    r.passed = false;
                    r.detail = "vertex " + std::to_string(v) + " inside a circumcircle";
                    return r;
                }
            }
        }
    }
    r.detail = std::to_string(tris.size()) + " triangles";
    return r;
}

CheckResult check_depths(const Triangulation& t, const DepthLabels& d) {
    CheckResult r{"depth-labels", true, ""};
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        int lowest = d.depth[v];
        for (VertexId u : t.neighbors(v)) lowest = std::min(lowest, d.depth[u]);
        const bool ok = t.on_hull(v) ? d.depth[v] == 1 : (d.depth[v] >= 2 && lowest == d.depth[v] - 1);
        if (!ok) {
            r.passed = false;
            r.detail = "vertex " + std::to_string(v) + " has depth " + std::to_string(d.depth[v]);
            return r;
        }
    }
    r.detail = "set depth " + std::to_string(d.set_depth);
    return r;
}

bool strictly_inside(const Triangulation& t, const std::vector<VertexId>& walk, const Point& p) {
    // Crossing count; points on the walk are excluded by the caller's vertex test.
    bool inside = false;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Point a = t.point(walk[i]), b = t.point(walk[(i + 1) % walk.size()]);
        if ((a.y > p.y) != (b.y > p.y)) {
            const Sign s = orient(a, b, p);
            if ((b.y > a.y && s == Sign::Positive) || (b.y < a.y && s == Sign::Negative)) inside = !inside;
        }
    }
    return inside;
}

CheckResult check_layers(const Triangulation& t, const DepthLabels& d, const std::vector<Layer>& ls) {
    CheckResult r{"layers", true, ""};
    std::size_t cycles = 0;
    for (const Layer& l : ls) {
        for (const Edge& e : l.edges) {
            if (d.depth[e.a] != l.index || d.depth[e.b] != l.index) {
                r.passed = false;
                r.detail = "edge leaves layer " + std::to_string(l.index);
                return r;
            }
        }
        for (const auto& comp_cycles : l.cycles) {
            for (const auto& walk : comp_cycles) {
                ++cycles;
                double x0 = t.point(walk[0]).x, x1 = x0, y0 = t.point(walk[0]).y, y1 = y0;
                for (VertexId v : walk) {
                    x0 = std::min(x0, t.point(v).x);
                    x1 = std::max(x1, t.point(v).x);
                    y0 = std::min(y0, t.point(v).y);
                    y1 = std::max(y1, t.point(v).y);
                }
                for (VertexId v = 0; v < t.vertex_count(); ++v) {
                    const Point p = t.point(v);
                    if (p.x <= x0 || p.x >= x1 || p.y <= y0 || p.y >= y1) continue;
                    if (std::find(walk.begin(), walk.end(), v) != walk.end()) continue;
                    if (strictly_inside(t, walk, p) && d.depth[v] <= l.index) {
                        r.passed = false;
                        r.detail = "vertex " + std::to_string(v) + " inside a layer-" + std::to_string(l.index) + " cycle";
                        return r;
                    }
                }
            }
        }
    }
    r.detail = std::to_string(cycles) + " cycles";
    return r;
}

} // namespace

std::vector<CheckResult> verify_point_set(const PointSet& s, std::size_t samples) {
    std::vector<CheckResult> out;
    const bool flat = s.size() < 3 || all_collinear(s.points());
    const LevelSet ls = depth_contours(s);
    if (!flat) {
        const Triangulation t = delaunay(s);
        const DepthLabels d = delaunay_depths(t);
        const std::vector<Layer> lay = layers(t, d);
        out.push_back(check_delaunay(t));
        out.push_back(check_depths(t, d));
        out.push_back(check_layers(t, d, lay));

        const std::size_t comps = component_count(lay), bound = component_bound(s.size(), d.set_depth);
        out.push_back({"component-bound", comps <= bound,
                       std::to_string(comps) + " components, bound " + std::to_string(bound)});
        const int levels = ls.level_count();
        out.push_back({"level-count", levels == d.set_depth || levels == d.set_depth + 1,
                       std::to_string(levels) + " levels, " + std::to_string(d.set_depth) + " layers"});

        CheckResult nesting{"nesting", true, ""};
        std::size_t probes = 0;
        for (std::size_t k = 1; k < ls.contours.size() && nesting.passed; ++k) {
            for (const ArcCurve& curve : ls.contours[k].curves) {
                for (const Arc& a : curve) {
                    ++probes;
                    const Classification c = classify(ls, a.interpolate(0.5));
                    if (std::max(c.level, c.alternative.value_or(0)) < ls.contours[k].level) {
                        nesting.passed = false;
                        nesting.detail = "contour " + std::to_string(ls.contours[k].level) + " leaves its parent";
                    }
                }
            }
        }
        if (nesting.passed) nesting.detail = std::to_string(probes) + " arcs inside their parent contour";
        out.push_back(nesting);
    }

    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(samples, 1)))));
    const GridSpec grid{side, side, 0.1};
    const LevelField field = sampled_level_field(s, grid);
    std::size_t compared = 0, skipped = 0;
    CheckResult sampled{"sampled-levels", true, ""};
    for (std::size_t iy = 0; iy < field.ys.size() && sampled.passed; ++iy) {
        for (std::size_t ix = 0; ix < field.xs.size(); ++ix) {
            const Point p{field.xs[ix], field.ys[iy]};
            const Classification c = classify(ls, p);
            if (c.ambiguous()) {
                ++skipped;
                continue;
            }
            ++compared;
            if (c.level != field.at(ix, iy)) {
                sampled.passed = false;
                sampled.detail = "level " + std::to_string(c.level) + " from contours, " +
                                 std::to_string(field.at(ix, iy)) + " by insertion";
                break;
            }
        }
    }
    if (sampled.passed) sampled.detail = std::to_string(compared) + " samples, " + std::to_string(skipped) + " on contours";
    out.push_back(sampled);

    io::ResultDocument doc;
    doc.command = "contours";
    for (const Point& p : s) doc.points.push_back({std::to_string(p.x), std::to_string(p.y)});
    doc.contours = io::contour_records(ls);
    doc.medians = io::point_records(medians(ls));
    const std::string text = io::emit(doc);
    const io::ResultDocument back = io::parse_document(text);
    out.push_back({"round-trip", back == doc && io::emit(back) == text, std::to_string(text.size()) + " bytes"});
    return out;
}

} // namespace strata
