#pragma once

#include "strata/depth.hpp"
#include "strata/geometry.hpp"
#include "strata/triangulation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace strata {

/// Circular arc traversed from start_angle to end_angle in the stated direction.
/// Angles are in [0, 2pi); equal angles denote the full circle.
struct Arc {
    Circle circle;
    double start_angle = 0.0;
    double end_angle = 0.0;
    bool counterclockwise = true;

    /// Angular length in (0, 2pi].
    double sweep() const;
    Point point_at(double angle) const;
    Point start() const { return point_at(start_angle); }
    Point end() const { return point_at(end_angle); }
    /// Point reached after travelling `fraction` of the sweep.
    Point interpolate(double fraction) const;
    double distance_to(const Point& p) const;
};

/// Closed curve made of arcs joined end to start.
using ArcCurve = std::vector<Arc>;

/// Boundary of the region of points with depth greater than `level`.
///
/// Level 1 is the convex hull polygon. Deeper contours are unions of closed arc
/// curves, each oriented with the deeper region on its left: an outer boundary runs
/// counterclockwise and a hole punched into it runs clockwise.
struct DepthContour {
    int level = 1;
    /// Counterclockwise hull vertices (level 1 only).
    std::vector<Point> polygon;
    std::vector<ArcCurve> curves;
};

struct LevelSet {
    /// contours[i].level == i + 1. Contour k encloses the points of depth >= k + 1.
    std::vector<DepthContour> contours;
    int depth_of_set = 0;
    /// Distance below which a point counts as lying on a contour.
    double tolerance = 0.0;

    /// Number of levels with at least one point: contours.size() + 1.
    int level_count() const { return static_cast<int>(contours.size()) + 1; }
};

/// Circumcircles of the triangles whose vertex depths are {j, j, j - 1}, each carrying
/// its defining triple. Throws RangeError unless 2 <= j <= d.set_depth.
std::vector<Circle> boundary_circles(const Triangulation& t, const DepthLabels& d, int j);

/// Boundaries of the bounded connected components of the complement of a union of
/// disks, as closed curves with the uncovered region on their left.
///
/// When `vertices` is given, the defining triples of the circles index into it and
/// intersections at shared vertices are placed exactly on those vertices. Circles that
/// coincide up to 1e-9 relative tolerance are merged.
std::vector<ArcCurve> union_hole_boundary(std::span<const Circle> disks, std::span<const Point> vertices = {});

/// Hull polygon plus one contour per deeper level, stopping at the first level with
/// no enclosed region.
LevelSet depth_contours(const Triangulation& t, const DepthLabels& d);

/// Contours of a set that may be degenerate: fewer than three points or all collinear
/// yield only the (degenerate) hull polygon.
LevelSet depth_contours(const PointSet& s);

struct Classification {
    int level = 1;
    /// Set when the point lies within tolerance of a contour: the level on the other side.
    std::optional<int> alternative;

    bool ambiguous() const { return alternative.has_value(); }
};

/// Level of p: 1 on or outside the hull, otherwise one more than the deepest
/// contour enclosing it.
Classification classify(const LevelSet& ls, const Point& p);

/// Distance from p to the nearest contour curve or hull edge.
double contour_distance(const LevelSet& ls, const Point& p);

/// Depth of p computed from the Delaunay disks of S: 1 outside or on the hull,
/// otherwise one more than the smallest depth among the vertices of triangles whose
/// circumscribed disk strictly contains p.
int level_from_disks(const Triangulation& t, const DepthLabels& d, const Point& p);

/// Centroids of the connected regions of the deepest level. Arc curves are
/// approximated with 64 segments per arc.
std::vector<Point> medians(const LevelSet& ls);

/// Signed area enclosed by a closed arc curve (positive when counterclockwise).
double signed_area(const ArcCurve& curve);

/// Winding number of a closed arc curve around p.
int winding_number(const ArcCurve& curve, const Point& p);

} // namespace strata
