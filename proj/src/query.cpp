#include "strata/query.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace strata {

namespace {

DepthLabels labels_with(const PointSet& s, const Point& p) {
    return delaunay_depths(s.with(p));
}

} // namespace

int query_depth(const PointSet& s, const Point& p) {
    if (!p.finite()) throw DomainError("query point must have finite coordinates");
    if (auto i = s.find(p)) return delaunay_depths(s).depth[*i];
    return labels_with(s, p).depth.back();
}

int query_depth(const Triangulation& t, const DepthLabels& d, const Point& p) {
    if (!p.finite()) throw DomainError("query point must have finite coordinates");
    if (auto i = t.point_set().find(p)) return d.depth[*i];
    return delaunay_depths(insert_point(t, p)).depth.back();
}

int DepthDelta::max_change() const {
    int best = 0;
    for (const Change& c : point_deltas) best = std::max(best, std::abs(c.after - c.before));
    return best;
}

DepthDelta depth_change_report(const PointSet& s, const Point& p) {
    if (!p.finite()) throw DomainError("query point must have finite coordinates");
    const DepthLabels before = delaunay_depths(s);
    DepthDelta out;
    out.set_depth_before = before.set_depth;
    out.point_deltas.resize(s.size());
    if (auto i = s.find(p)) {
        for (std::size_t k = 0; k < s.size(); ++k) out.point_deltas[k] = {before.depth[k], before.depth[k]};
        out.set_depth_after = before.set_depth;
        out.query_depth = before.depth[*i];
        return out;
    }
    const DepthLabels after = labels_with(s, p);
    for (std::size_t k = 0; k < s.size(); ++k) out.point_deltas[k] = {before.depth[k], after.depth[k]};
    out.set_depth_after = after.set_depth;
    out.query_depth = after.depth.back();
    return out;
}

} // namespace strata
