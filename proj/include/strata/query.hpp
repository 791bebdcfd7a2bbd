#pragma once

#include "strata/depth.hpp"

namespace strata {

/// d(p, S): the Delaunay depth p receives in DT(S u {p}). A point of S gets its own
/// depth in DT(S). Collinear S u {p} gives 1.
int query_depth(const PointSet& s, const Point& p);

/// Same, reusing a prebuilt DT(S) and its labels.
int query_depth(const Triangulation& t, const DepthLabels& d, const Point& p);

/// Effect of inserting one point on the depths of the existing points.
struct DepthDelta {
    struct Change {
        int before = 0;
        int after = 0;
        friend bool operator==(const Change&, const Change&) = default;
    };
    /// Indexed like S.
    std::vector<Change> point_deltas;
    int set_depth_before = 0;
    /// Depth of S u {p}, including p itself.
    int set_depth_after = 0;
    /// Depth of p in S u {p}.
    int query_depth = 0;

    /// Largest |after - before| over the points of S.
    int max_change() const;
};

DepthDelta depth_change_report(const PointSet& s, const Point& p);

} // namespace strata
