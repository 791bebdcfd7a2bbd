#include "strata/triangulation.hpp"

#include "mesh.hpp"
#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace strata {

namespace detail {

namespace {

std::uint64_t edge_key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool strictly_between(const Point& u, const Point& v, const Point& p) {
    // p is collinear with u and v; lexicographic order agrees with order along the line.
    return (u < p && p < v) || (v < p && p < u);
}

} // namespace

Sign Mesh::in_circle_sos(VertexId a, VertexId b, VertexId c, VertexId d, const Point& pd) const {
    const Point& pa = pts[a];
    const Point& pb = pts[b];
    const Point& pc = pts[c];
    Sign s = in_circle_ccw(pa, pb, pc, pd);
    if (s != Sign::Zero) return s;

    // Cocircular: lower the lifted height of the lowest-indexed vertex by a dominant
    // infinitesimal. The decision then depends on which side of the opposite
    // triangle edge d falls.
    const VertexId m = std::min({a, b, c, d});
    if (m == d) {
        s = Sign::Positive;
    } else if (m == a) {
        s = orient(pb, pc, pd) == Sign::Negative ? Sign::Positive : Sign::Negative;
    } else if (m == b) {
        s = orient(pc, pa, pd) == Sign::Negative ? Sign::Positive : Sign::Negative;
    } else {
        s = orient(pa, pb, pd) == Sign::Negative ? Sign::Positive : Sign::Negative;
    }
    return rule == CocircularRule::JoinLowestIndex ? s : -s;
}

bool Mesh::conflicts(std::uint32_t t, const Point& p, VertexId pid) const {
    const Triangle& v = tri[t];
    if (v[2] == kGhost) {
        const Sign o = orient(pts[v[0]], pts[v[1]], p);
        if (o == Sign::Positive) return true;
        return o == Sign::Zero && strictly_between(pts[v[0]], pts[v[1]], p);
    }
    return in_circle_sos(v[0], v[1], v[2], pid, p) == Sign::Positive;
}

std::uint32_t Mesh::any_alive() const {
    if (last < tri.size() && alive[last]) return last;
    for (std::uint32_t t = 0; t < tri.size(); ++t) {
        if (alive[t]) return t;
    }
    return kNoTriangle;
}

std::uint32_t Mesh::locate(const Point& p, std::uint32_t start) const {
    std::uint32_t t = (start < tri.size() && alive[start]) ? start : any_alive();
    if (is_ghost(t)) t = adj[t][2];
    unsigned rotate = 0;
    const std::size_t limit = 4 * tri.size() + 16;
    for (std::size_t step = 0; step < limit; ++step) {
        if (is_ghost(t)) return t;
        const Triangle& v = tri[t];
        bool moved = false;
        for (unsigned k = 0; k < 3; ++k) {
            const unsigned i = (k + rotate) % 3;
            if (orient(pts[v[(i + 1) % 3]], pts[v[(i + 2) % 3]], p) == Sign::Negative) {
                t = adj[t][i];
                moved = true;
                break;
            }
        }
        if (!moved) return t;
        rotate = (rotate + 1) % 3;
    }
    throw Error("point location did not terminate; triangulation is corrupt");
}

std::vector<std::uint32_t> Mesh::cavity(const Point& p, VertexId pid, std::uint32_t start) const {
    std::vector<std::uint32_t> found{start};
    std::vector<std::uint32_t> rejected;
    auto contains = [](const std::vector<std::uint32_t>& list, std::uint32_t x) {
        return std::find(list.begin(), list.end(), x) != list.end();
    };
    for (std::size_t k = 0; k < found.size(); ++k) {
        const std::uint32_t t = found[k];
        for (unsigned i = 0; i < 3; ++i) {
            const std::uint32_t nb = adj[t][i];
            if (contains(found, nb) || contains(rejected, nb)) continue;
            if (conflicts(nb, p, pid)) {
                found.push_back(nb);
            } else {
                rejected.push_back(nb);
            }
        }
    }
    return found;
}

std::uint32_t Mesh::allocate() {
    if (!free_list.empty()) {
        const std::uint32_t t = free_list.back();
        free_list.pop_back();
        alive[t] = 1;
        return t;
    }
    tri.push_back({});
    adj.push_back({kNoTriangle, kNoTriangle, kNoTriangle});
    alive.push_back(1);
    return static_cast<std::uint32_t>(tri.size() - 1);
}

void Mesh::insert(VertexId pid) {
    const Point p = pts[pid];
    const std::uint32_t start = locate(p, last);
    if (!is_ghost(start)) {
        for (VertexId v : tri[start]) {
            if (pts[v] == p) {
                throw DuplicatePoint("point " + std::to_string(pid) + " coincides with point " +
                                         std::to_string(v),
                                     v, pid);
            }
        }
    }
    std::vector<std::uint32_t> cav = cavity(p, pid, start);
    std::sort(cav.begin(), cav.end());

    struct Boundary {
        VertexId u, v;
        std::uint32_t outside;
    };
    std::vector<Boundary> boundary;
    for (std::uint32_t t : cav) {
        for (unsigned i = 0; i < 3; ++i) {
            const std::uint32_t nb = adj[t][i];
            if (std::binary_search(cav.begin(), cav.end(), nb)) continue;
            boundary.push_back({tri[t][(i + 1) % 3], tri[t][(i + 2) % 3], nb});
        }
    }
    for (std::uint32_t t : cav) {
        alive[t] = 0;
        free_list.push_back(t);
    }

    // New triangles (u, v, p) in logical order; linked, then rotated so that a
    // ghost vertex sits in slot 2.
    std::vector<std::uint32_t> ids(boundary.size());
    for (std::size_t k = 0; k < boundary.size(); ++k) ids[k] = allocate();

    std::unordered_map<VertexId, std::size_t> by_first, by_second;
    by_first.reserve(boundary.size() * 2);
    by_second.reserve(boundary.size() * 2);
    for (std::size_t k = 0; k < boundary.size(); ++k) {
        by_first[boundary[k].u] = k;
        by_second[boundary[k].v] = k;
    }
    for (std::size_t k = 0; k < boundary.size(); ++k) {
        const Boundary& b = boundary[k];
        Triangle verts{b.u, b.v, pid};
        std::array<std::uint32_t, 3> links{ids[by_first.at(b.v)], ids[by_second.at(b.u)], b.outside};
        unsigned r = 0;
        if (b.u == kGhost) r = 1;
        if (b.v == kGhost) r = 2;
        const std::uint32_t id = ids[k];
        for (unsigned i = 0; i < 3; ++i) {
            tri[id][i] = verts[(i + r) % 3];
            adj[id][i] = links[(i + r) % 3];
        }
        // Back-link from the outside triangle.
        const Triangle& o = tri[b.outside];
        for (unsigned j = 0; j < 3; ++j) {
            if (o[j] != b.u && o[j] != b.v) {
                adj[b.outside][j] = id;
                break;
            }
        }
        for (VertexId v : verts) {
            if (v != kGhost) vertex_tri[v] = id;
        }
    }
    last = ids.front();
}

void Mesh::link_all() {
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, unsigned>> half;
    half.reserve(tri.size() * 3);
    for (std::uint32_t t = 0; t < tri.size(); ++t) {
        if (!alive[t]) continue;
        for (unsigned i = 0; i < 3; ++i) {
            half[edge_key(tri[t][(i + 1) % 3], tri[t][(i + 2) % 3])] = {t, i};
        }
    }
    for (std::uint32_t t = 0; t < tri.size(); ++t) {
        if (!alive[t]) continue;
        for (unsigned i = 0; i < 3; ++i) {
            auto it = half.find(edge_key(tri[t][(i + 2) % 3], tri[t][(i + 1) % 3]));
            if (it == half.end()) throw DegenerateInput("triangle list is not a closed triangulation");
            adj[t][i] = it->second.first;
        }
    }
}

Mesh seed_mesh(std::vector<Point> pts, VertexId a, VertexId b, VertexId c, CocircularRule rule) {
    Mesh m;
    m.pts = std::move(pts);
    m.rule = rule;
    m.vertex_tri.assign(m.pts.size(), kNoTriangle);
    m.tri = {{a, b, c}, {b, a, kGhost}, {c, b, kGhost}, {a, c, kGhost}};
    m.adj.assign(4, {kNoTriangle, kNoTriangle, kNoTriangle});
    m.alive.assign(4, 1);
    m.link_all();
    m.vertex_tri[a] = m.vertex_tri[b] = m.vertex_tri[c] = 0;
    return m;
}

} // namespace detail

namespace {

using detail::kGhost;
using detail::kNoTriangle;
using detail::Mesh;

// Position along a Hilbert curve on a 2^16 x 2^16 grid.
std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y) {
    constexpr std::uint32_t n = 1u << 16;
    std::uint64_t d = 0;
    for (std::uint32_t s = n / 2; s > 0; s /= 2) {
        const std::uint32_t rx = (x & s) ? 1 : 0;
        const std::uint32_t ry = (y & s) ? 1 : 0;
        d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
        if (ry == 0) {
            if (rx == 1) {
                x = n - 1 - x;
                y = n - 1 - y;
            }
            std::swap(x, y);
        }
    }
    return d;
}

std::vector<VertexId> spatial_order(std::span<const Point> pts) {
    double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double sx = maxx > minx ? 65535.0 / (maxx - minx) : 0.0;
    const double sy = maxy > miny ? 65535.0 / (maxy - miny) : 0.0;
    std::vector<std::pair<std::uint64_t, VertexId>> keyed(pts.size());
    for (VertexId i = 0; i < pts.size(); ++i) {
        const auto qx = static_cast<std::uint32_t>((pts[i].x - minx) * sx);
        const auto qy = static_cast<std::uint32_t>((pts[i].y - miny) * sy);
        keyed[i] = {hilbert_index(std::min(qx, 65535u), std::min(qy, 65535u)), i};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexId> order(pts.size());
    for (std::size_t k = 0; k < keyed.size(); ++k) order[k] = keyed[k].second;
    return order;
}

} // namespace

Triangulation::Triangulation(PointSet points, std::shared_ptr<const Mesh> mesh)
    : points_(std::move(points)), mesh_(std::move(mesh)) {
    const Mesh& m = *mesh_;
    const std::size_t n = points_.size();

    mesh_to_public_.assign(m.tri.size(), kNoTriangle);
    for (std::uint32_t t = 0; t < m.tri.size(); ++t) {
        if (!m.alive[t] || m.is_ghost(t)) continue;
        mesh_to_public_[t] = static_cast<std::uint32_t>(triangles_.size());
        public_to_mesh_.push_back(t);
        triangles_.push_back(m.tri[t]);
    }

    std::vector<VertexId> hull_next(n, kGhost);
    for (std::uint32_t t = 0; t < m.tri.size(); ++t) {
        if (!m.alive[t] || !m.is_ghost(t)) continue;
        // Ghost (u, v, G) lies outside hull edge v -> u.
        hull_next[m.tri[t][1]] = m.tri[t][0];
    }
    on_hull_.assign(n, 0);
    VertexId first = kGhost;
    for (VertexId v = 0; v < n; ++v) {
        if (hull_next[v] != kGhost) {
            first = v;
            break;
        }
    }
    for (VertexId v = first; v != kGhost;) {
        hull_.push_back(v);
        on_hull_[v] = 1;
        v = hull_next[v];
        if (v == first || hull_.size() > n) break;
    }

    std::vector<std::uint32_t> offsets(n + 1, 0);
    std::vector<VertexId> ring_data;
    ring_data.reserve(6 * n);
    std::vector<std::pair<VertexId, VertexId>> fan;
    for (VertexId v = 0; v < n; ++v) {
        fan.clear();
        const std::uint32_t start = m.vertex_tri[v];
        if (start == kNoTriangle) throw DegenerateInput("vertex " + std::to_string(v) + " is not triangulated");
        std::uint32_t t = start;
        do {
            const Triangle& tv = m.tri[t];
            const unsigned i = tv[0] == v ? 0 : (tv[1] == v ? 1 : 2);
            fan.emplace_back(tv[(i + 1) % 3], tv[(i + 2) % 3]);
            t = m.adj[t][(i + 1) % 3];
        } while (t != start && fan.size() <= m.tri.size());
        auto ghost_first = std::find_if(fan.begin(), fan.end(),
                                        [](const auto& ab) { return ab.first == kGhost; });
        if (ghost_first != fan.end()) std::rotate(fan.begin(), ghost_first + 1, fan.end());
        for (const auto& [a, b] : fan) {
            if (a != kGhost) ring_data.push_back(a);
        }
        offsets[v + 1] = static_cast<std::uint32_t>(ring_data.size());
    }
    std::vector<VertexId> sorted_data = ring_data;
    for (VertexId v = 0; v < n; ++v) {
        std::sort(sorted_data.begin() + offsets[v], sorted_data.begin() + offsets[v + 1]);
    }
    rings_ = VertexLists(offsets, std::move(ring_data));
    neighbors_ = VertexLists(std::move(offsets), std::move(sorted_data));
}

CocircularRule Triangulation::rule() const noexcept { return mesh_->rule; }

std::vector<Edge> Triangulation::edges() const {
    std::vector<Edge> out;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        for (VertexId u : neighbors(v)) {
            if (v < u) out.push_back({v, u});
        }
    }
    return out;
}

std::optional<std::uint32_t> Triangulation::locate(const Point& p, std::optional<std::uint32_t> hint) const {
    const std::uint32_t start = hint && *hint < public_to_mesh_.size() ? public_to_mesh_[*hint] : mesh_->last;
    const std::uint32_t t = mesh_->locate(p, start);
    if (mesh_->is_ghost(t)) return std::nullopt;
    return mesh_to_public_[t];
}

Triangulation::Conflict Triangulation::conflict_region(const Point& p, std::optional<std::uint32_t> hint) const {
    Conflict out;
    const Mesh& m = *mesh_;
    const std::uint32_t start = hint && *hint < public_to_mesh_.size() ? public_to_mesh_[*hint] : m.last;
    const std::uint32_t t0 = m.locate(p, start);
    if (!m.is_ghost(t0)) {
        for (VertexId v : m.tri[t0]) {
            if (m.pts[v] == p) {
                out.coincident = v;
                return out;
            }
        }
    }
    const auto query_id = static_cast<VertexId>(vertex_count());
    for (std::uint32_t t : m.cavity(p, query_id, t0)) {
        if (m.is_ghost(t)) {
            out.outside_hull = true;
        } else {
            out.triangles.push_back(mesh_to_public_[t]);
        }
        for (VertexId v : m.tri[t]) {
            if (v != kGhost) out.vertices.push_back(v);
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    return out;
}

Triangulation Triangulation::from_triangles(const PointSet& points, std::vector<Triangle> triangles,
                                            CocircularRule rule) {
    if (triangles.empty()) throw DegenerateInput("empty triangle list");
    auto m = std::make_shared<Mesh>();
    m->pts.assign(points.begin(), points.end());
    m->rule = rule;
    m->vertex_tri.assign(points.size(), kNoTriangle);
    std::unordered_map<std::uint64_t, char> directed;
    for (const Triangle& t : triangles) {
        for (unsigned i = 0; i < 3; ++i) {
            if (t[i] >= points.size()) throw RangeError("triangle references a missing vertex");
            directed[detail::edge_key(t[i], t[(i + 1) % 3])] = 1;
        }
    }
    std::vector<Triangle> all = triangles;
    for (const Triangle& t : triangles) {
        for (unsigned i = 0; i < 3; ++i) {
            const VertexId a = t[i], b = t[(i + 1) % 3];
            if (!directed.count(detail::edge_key(b, a))) all.push_back({b, a, kGhost});
        }
    }
    m->tri = std::move(all);
    m->adj.assign(m->tri.size(), {kNoTriangle, kNoTriangle, kNoTriangle});
    m->alive.assign(m->tri.size(), 1);
    m->link_all();
    for (std::uint32_t t = 0; t < m->tri.size(); ++t) {
        for (VertexId v : m->tri[t]) {
            if (v != kGhost) m->vertex_tri[v] = t;
        }
    }
    return Triangulation(points, std::move(m));
}

std::vector<VertexId> convex_hull(const PointSet& s) {
    const std::size_t n = s.size();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return s[a] < s[b]; });
    if (n == 1) return order;

    // Andrew's monotone chain; collinear points are popped.
    std::vector<VertexId> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(s[hull[k - 2]], s[hull[k - 1]], s[order[i]]) != Sign::Positive) --k;
        hull[k++] = order[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(s[hull[k - 2]], s[hull[k - 1]], s[order[i]]) != Sign::Positive) --k;
        hull[k++] = order[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

Triangulation delaunay(const PointSet& s, CocircularRule rule) {
    const std::size_t n = s.size();
    if (n < 3) throw SizeError("Delaunay triangulation needs at least 3 points, got " + std::to_string(n));
    if (all_collinear(s.points())) {
        throw DegenerateInput("all points are collinear; the Delaunay triangulation does not exist");
    }
    const std::vector<VertexId> order = spatial_order(s.points());
    const VertexId a = order[0];
    const VertexId b = order[1];
    std::size_t k = 2;
    while (orient(s[a], s[b], s[order[k]]) == Sign::Zero) ++k;
    VertexId c = order[k];
    VertexId b2 = b;
    if (orient(s[a], s[b], s[c]) == Sign::Negative) std::swap(b2, c);

    auto m = std::make_shared<Mesh>(detail::seed_mesh({s.begin(), s.end()}, a, b2, c, rule));
    for (std::size_t i = 2; i < n; ++i) {
        if (i == k) continue;
        m->insert(order[i]);
    }
    return Triangulation(s, std::move(m));
}

Triangulation insert_point(const Triangulation& t, const Point& p) {
    PointSet grown = t.point_set().with(p);
    auto m = std::make_shared<Mesh>(*t.mesh_);
    m->pts.push_back(p);
    m->vertex_tri.push_back(kNoTriangle);
    m->insert(static_cast<VertexId>(grown.size() - 1));
    return Triangulation(std::move(grown), std::move(m));
}

} // namespace strata
