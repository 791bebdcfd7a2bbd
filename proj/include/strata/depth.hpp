#pragma once

#include "strata/point_set.hpp"
#include "strata/triangulation.hpp"

#include <span>
#include <vector>

namespace strata {

/// Delaunay depth of every vertex: one plus its graph distance in DT(S) to the hull.
struct DepthLabels {
    std::vector<int> depth;
    /// Depth of the deepest vertex.
    int set_depth = 0;

    friend bool operator==(const DepthLabels&, const DepthLabels&) = default;
};

/// Subgraph of DT(S) induced by the vertices of one depth.
struct Layer {
    int index = 0;
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    /// Connected components, each sorted, ordered by their smallest vertex.
    std::vector<std::vector<VertexId>> components;
    /// For each component, the boundaries of the bounded faces of its plane
    /// embedding as closed counterclockwise vertex walks (first vertex not repeated).
    /// A walk may revisit a vertex when a tree hangs into the face.
    std::vector<std::vector<std::vector<VertexId>>> cycles;

    friend bool operator==(const Layer&, const Layer&) = default;
};

/// Multi-source breadth-first search seeded with depth 1 at every boundary vertex.
DepthLabels delaunay_depths(const Triangulation& t);

/// Depth labels for an arbitrary point set: sets with fewer than three points or
/// all points collinear have every point on the hull, hence depth 1.
DepthLabels delaunay_depths(const PointSet& s);

/// Layers 1..set_depth.
std::vector<Layer> layers(const Triangulation& t, const DepthLabels& d);

/// Total number of connected components over all layers.
std::size_t component_count(std::span<const Layer> layers);

/// Upper bound floor((n - m + 2) / 2) on component_count for n points of depth m.
std::size_t component_bound(std::size_t n, int m);

} // namespace strata
