#pragma once

#include "strata/point_set.hpp"
#include "strata/triangulation.hpp"

#include <span>
#include <utility>
#include <vector>

namespace strata {

/// DT(S) straight from the empty-circle definition, O(n^4).
/// Throws SizeError for n < 3 and DegenerateInput for collinear input or when four
/// cocircular points make the answer depend on a tie-break.
Triangulation naive_delaunay(const PointSet& s);

struct GridSpec {
    std::size_t nx = 50;
    std::size_t ny = 50;
    /// Margin added on every side, as a fraction of the bounding-box extent.
    double margin = 0.1;
};

/// Insertion depth d(p, S) evaluated at the nodes of a regular grid.
struct LevelField {
    std::vector<double> xs;
    std::vector<double> ys;
    /// Row-major: level[iy * xs.size() + ix].
    std::vector<int> level;

    int at(std::size_t ix, std::size_t iy) const { return level[iy * xs.size() + ix]; }
};

LevelField sampled_level_field(const PointSet& s, const GridSpec& grid = {});

/// Cross (+-x, 0), (0, +-x) for each distinct value x. Query the origin: its depth is
/// the number of distinct values plus one.
/// Throws DomainError for nonpositive or non-finite values and SizeError for an empty input.
PointSet element_uniqueness_gadget(std::span<const double> values);

/// Three families of k points on the rays from the common circumcenter to the
/// vertices of two homothetic triangles, with the circumcircle of the innermost
/// triangle crossing each edge of the outermost one. The set has depth k; the returned
/// point lies outside the hull and inside that circumcircle.
/// Throws RangeError for k < 2.
std::pair<PointSet, Point> nested_triangle_gadget(int k);

/// 2k + 2 points: one apex above a flat convex chain of k + 1 points, with one
/// point just above the middle of every chain edge. The hull is one component and each
/// of the k inner points is an isolated component of layer 2.
/// Throws RangeError for k < 1.
PointSet component_extremal_gadget(int k);

} // namespace strata
