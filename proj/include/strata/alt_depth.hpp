#pragma once

#include "strata/point_set.hpp"

#include <vector>

namespace strata {

/// Convex (onion-peeling) depth.
struct ConvexDepthLabels {
    std::vector<int> depth;
    /// Layer polygons, outermost first, each counterclockwise without collinear
    /// vertices. A layer that is a single point or a segment has 1 or 2 vertices.
    std::vector<std::vector<VertexId>> layers;
};

/// Peels convex hulls until no point remains. Each round removes every point on the
/// boundary of the current hull, including points inside hull edges.
ConvexDepthLabels convex_depths(const PointSet& s);

struct TukeyDepthValue {
    int depth = 1;
    /// Unit normal w of a minimizing line: the open half-plane {x : (x - p).w > 0}
    /// holds exactly depth - 1 points of S.
    Point witness_direction{0.0, 1.0};
};

/// Location depth of p: 1 + the minimum over lines through p of the number of points
/// strictly on one side. Points on the line, and a point equal to p, count on neither side.
/// Angular sort plus rotating sweep, O(n log n).
TukeyDepthValue tukey_depth(const PointSet& s, const Point& p);

} // namespace strata
