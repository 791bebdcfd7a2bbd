#pragma once

#include "strata/geometry.hpp"
#include "strata/point_set.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace strata {

using Triangle = std::array<VertexId, 3>;

/// Undirected edge with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// How ties between the two diagonals of a cocircular quadrilateral are broken.
///
/// JoinLowestIndex keeps the diagonal incident to the lowest-indexed of the four
/// vertices, which is the diagonal whose sorted endpoint pair is lexicographically
/// smallest. AvoidLowestIndex keeps the other one. Both are consistent symbolic
/// perturbations, so the triangulation is unique for a given rule and independent
/// of insertion order.
enum class CocircularRule { JoinLowestIndex, AvoidLowestIndex };

/// Compressed per-vertex lists.
class VertexLists {
public:
    VertexLists() = default;
    VertexLists(std::vector<std::uint32_t> offsets, std::vector<VertexId> data)
        : offsets_(std::move(offsets)), data_(std::move(data)) {}

    std::span<const VertexId> operator[](VertexId v) const {
        return {data_.data() + offsets_[v], data_.data() + offsets_[v + 1]};
    }
    std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<VertexId> data_;
};

namespace detail {
struct Mesh;
}

/// Delaunay triangulation DT(S) of a point set that is not entirely collinear.
///
/// Immutable; copies share the underlying mesh. `hull()` is the counterclockwise
/// boundary cycle of the triangulation, so points lying in the interior of a
/// convex-hull edge appear in it (unlike `convex_hull`). With that convention the
/// triangle count is always 2n - 2 - hull().size().
class Triangulation {
public:
    const PointSet& point_set() const noexcept { return points_; }
    std::size_t vertex_count() const noexcept { return points_.size(); }
    const Point& point(VertexId v) const { return points_[v]; }

    /// Counterclockwise vertex triples.
    std::span<const Triangle> triangles() const noexcept { return triangles_; }
    /// Neighbours of v sorted by index.
    std::span<const VertexId> neighbors(VertexId v) const { return neighbors_[v]; }
    /// Neighbours of v in counterclockwise angular order. For a boundary vertex the
    /// list starts at its successor on the hull and ends at its predecessor.
    std::span<const VertexId> ring(VertexId v) const { return rings_[v]; }
    std::span<const VertexId> hull() const noexcept { return hull_; }
    bool on_hull(VertexId v) const { return on_hull_[v] != 0; }
    std::vector<Edge> edges() const;
    CocircularRule rule() const noexcept;

    /// The triangles whose circumscribed disk strictly contains p: exactly the
    /// triangles that inserting p would destroy. Ties on a circle are resolved as if
    /// p carried index vertex_count().
    struct Conflict {
        /// p lies outside the hull or in the interior of a hull edge.
        bool outside_hull = false;
        /// Set when p coincides with an existing vertex; the other fields are empty then.
        std::optional<VertexId> coincident;
        /// Indices into triangles(), unordered.
        std::vector<std::uint32_t> triangles;
        /// Vertices of those triangles, sorted, unique.
        std::vector<VertexId> vertices;
    };
    Conflict conflict_region(const Point& p, std::optional<std::uint32_t> hint = {}) const;

    /// Index into triangles() of a triangle whose closed region contains p, or
    /// nullopt when p is outside the hull.
    std::optional<std::uint32_t> locate(const Point& p, std::optional<std::uint32_t> hint = {}) const;

    /// Builds a triangulation from an explicit triangle list (used by brute-force
    /// oracles). Triangles must be counterclockwise and form a triangulation of the
    /// convex hull of `points`.
    static Triangulation from_triangles(const PointSet& points, std::vector<Triangle> triangles,
                                        CocircularRule rule = CocircularRule::JoinLowestIndex);

private:
    friend Triangulation delaunay(const PointSet&, CocircularRule);
    friend Triangulation insert_point(const Triangulation&, const Point&);

    Triangulation(PointSet points, std::shared_ptr<const detail::Mesh> mesh);

    PointSet points_;
    std::shared_ptr<const detail::Mesh> mesh_;
    std::vector<Triangle> triangles_;
    std::vector<std::uint32_t> mesh_to_public_;
    std::vector<std::uint32_t> public_to_mesh_;
    VertexLists neighbors_;
    VertexLists rings_;
    std::vector<VertexId> hull_;
    std::vector<char> on_hull_;
};

/// Counterclockwise convex hull starting at the lexicographically smallest point.
/// Points in the interior of hull edges are excluded; a single point gives a
/// singleton and an all-collinear set gives its two extreme points.
std::vector<VertexId> convex_hull(const PointSet& s);

/// Throws SizeError when n < 3 and DegenerateInput when all points are collinear.
Triangulation delaunay(const PointSet& s, CocircularRule rule = CocircularRule::JoinLowestIndex);

/// DT(S u {p}) with p taking index n. The input is left untouched.
/// Throws DuplicatePoint if p is already present.
Triangulation insert_point(const Triangulation& t, const Point& p);

} // namespace strata
