#pragma once

// Triangle mesh with a vertex at infinity, used to build Delaunay triangulations
// incrementally (Bowyer-Watson).

#include "strata/geometry.hpp"
#include "strata/triangulation.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace strata::detail {

inline constexpr VertexId kGhost = std::numeric_limits<VertexId>::max();
inline constexpr std::uint32_t kNoTriangle = std::numeric_limits<std::uint32_t>::max();

/// Triangles are counterclockwise; a ghost triangle (u, v, kGhost) covers the
/// outside of hull edge v->u, i.e. the unbounded region to the left of u->v.
/// `adj[t][i]` is the triangle across the edge opposite vertex i.
struct Mesh {
    std::vector<Point> pts;
    std::vector<Triangle> tri;
    std::vector<std::array<std::uint32_t, 3>> adj;
    std::vector<char> alive;
    std::vector<std::uint32_t> free_list;
    std::vector<std::uint32_t> vertex_tri;
    CocircularRule rule = CocircularRule::JoinLowestIndex;
    std::uint32_t last = 0;

    bool is_ghost(std::uint32_t t) const { return tri[t][2] == kGhost; }

    /// in_circle for mesh vertices with the symbolic cocircular tie-break.
    Sign in_circle_sos(VertexId a, VertexId b, VertexId c, VertexId d, const Point& pd) const;

    /// Does the circumdisk of t strictly contain p (with index pid for ties)?
    bool conflicts(std::uint32_t t, const Point& p, VertexId pid) const;

    /// Visibility walk. Returns a real triangle whose closed region contains p or a
    /// ghost triangle in conflict with p.
    std::uint32_t locate(const Point& p, std::uint32_t start) const;

    /// All triangles in conflict with p, starting from a located triangle.
    std::vector<std::uint32_t> cavity(const Point& p, VertexId pid, std::uint32_t start) const;

    /// Inserts pts[pid]. Throws DuplicatePoint if it coincides with a vertex.
    void insert(VertexId pid);

    /// Computes `adj` for triangles whose edges are all matched (ghosts included).
    void link_all();

    std::uint32_t any_alive() const;

private:
    std::uint32_t allocate();
};

/// Initial mesh from three counterclockwise, non-collinear vertices.
Mesh seed_mesh(std::vector<Point> pts, VertexId a, VertexId b, VertexId c, CocircularRule rule);

} // namespace strata::detail
