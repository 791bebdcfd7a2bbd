#include "strata/depth.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace strata {

DepthLabels delaunay_depths(const Triangulation& t) {
    const std::size_t n = t.vertex_count();
    DepthLabels out;
    out.depth.assign(n, 0);
    std::deque<VertexId> queue;
    for (VertexId v : t.hull()) {
        out.depth[v] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : t.neighbors(v)) {
            if (out.depth[u] == 0) {
                out.depth[u] = out.depth[v] + 1;
                queue.push_back(u);
            }
        }
    }
    out.set_depth = n == 0 ? 0 : *std::max_element(out.depth.begin(), out.depth.end());
    return out;
}

DepthLabels delaunay_depths(const PointSet& s) {
    if (s.size() < 3 || all_collinear(s.points())) {
        return DepthLabels{std::vector<int>(s.size(), 1), 1};
    }
    return delaunay_depths(delaunay(s));
}

namespace {

double walk_area(const Triangulation& t, const std::vector<VertexId>& walk) {
    double twice = 0.0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
        twice += cross(t.point(walk[k]), t.point(walk[(k + 1) % walk.size()]));
    }
    return 0.5 * twice;
}

} // namespace

std::vector<Layer> layers(const Triangulation& t, const DepthLabels& d) {
    const std::size_t n = t.vertex_count();
    std::vector<Layer> out(static_cast<std::size_t>(d.set_depth));
    for (int i = 1; i <= d.set_depth; ++i) out[i - 1].index = i;
    for (VertexId v = 0; v < n; ++v) out[d.depth[v] - 1].vertices.push_back(v);

    // Rotation system of each induced subgraph: the counterclockwise ring filtered
    // to same-depth neighbours.
    std::vector<std::uint32_t> offset(n + 1, 0);
    std::vector<VertexId> induced;
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : t.ring(v)) {
            if (d.depth[u] == d.depth[v]) induced.push_back(u);
        }
        offset[v + 1] = static_cast<std::uint32_t>(induced.size());
    }
    auto half_edge = [&](VertexId from, VertexId to) -> std::uint32_t {
        for (std::uint32_t k = offset[from]; k < offset[from + 1]; ++k) {
            if (induced[k] == to) return k;
        }
        return std::numeric_limits<std::uint32_t>::max();
    };
    std::vector<VertexId> tail(induced.size());
    for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t k = offset[v]; k < offset[v + 1]; ++k) tail[k] = v;
    }

    std::vector<std::uint32_t> component_of(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<char> used(induced.size(), 0);
    for (Layer& layer : out) {
        for (VertexId v : layer.vertices) {
            for (std::uint32_t k = offset[v]; k < offset[v + 1]; ++k) {
                if (v < induced[k]) layer.edges.push_back({v, induced[k]});
            }
        }
        std::sort(layer.edges.begin(), layer.edges.end());

        for (VertexId root : layer.vertices) {
            if (seen[root]) continue;
            std::vector<VertexId> comp{root};
            seen[root] = 1;
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const VertexId v = comp[k];
                for (std::uint32_t h = offset[v]; h < offset[v + 1]; ++h) {
                    if (!seen[induced[h]]) {
                        seen[induced[h]] = 1;
                        comp.push_back(induced[h]);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            for (VertexId v : comp) component_of[v] = static_cast<std::uint32_t>(layer.components.size());
            layer.components.push_back(std::move(comp));
        }

        // Face walks: after arriving at u from v, leave along the neighbour that
        // precedes v in u's counterclockwise order. Faces lie to the left.
        std::vector<std::vector<std::vector<VertexId>>> walks(layer.components.size());
        std::vector<std::vector<double>> areas(layer.components.size());
        for (VertexId v : layer.vertices) {
            for (std::uint32_t h0 = offset[v]; h0 < offset[v + 1]; ++h0) {
                if (used[h0]) continue;
                std::vector<VertexId> walk;
                std::uint32_t h = h0;
                while (!used[h]) {
                    used[h] = 1;
                    const VertexId from = tail[h];
                    const VertexId to = induced[h];
                    walk.push_back(from);
                    const std::uint32_t back = half_edge(to, from);
                    const std::uint32_t deg = offset[to + 1] - offset[to];
                    const std::uint32_t pos = back - offset[to];
                    h = offset[to] + (pos + deg - 1) % deg;
                }
                const std::uint32_t c = component_of[v];
                areas[c].push_back(walk_area(t, walk));
                walks[c].push_back(std::move(walk));
            }
        }
        layer.cycles.resize(layer.components.size());
        for (std::size_t c = 0; c < walks.size(); ++c) {
            if (walks[c].empty()) continue;
            const auto outer = static_cast<std::size_t>(
                std::min_element(areas[c].begin(), areas[c].end()) - areas[c].begin());
            for (std::size_t w = 0; w < walks[c].size(); ++w) {
                if (w == outer) continue;
                std::vector<VertexId> walk = std::move(walks[c][w]);
                std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
                layer.cycles[c].push_back(std::move(walk));
            }
            std::sort(layer.cycles[c].begin(), layer.cycles[c].end());
        }
    }
    return out;
}

std::size_t component_count(std::span<const Layer> layers) {
    std::size_t total = 0;
    for (const Layer& l : layers) total += l.components.size();
    return total;
}

std::size_t component_bound(std::size_t n, int m) {
    const long long v = static_cast<long long>(n) - m + 2;
    return v <= 0 ? 0 : static_cast<std::size_t>(v / 2);
}

} // namespace strata
