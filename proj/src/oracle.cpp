#include "strata/oracle.hpp"

#include "strata/depth.hpp"
#include "strata/errors.hpp"
#include "strata/query.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace strata {

Triangulation naive_delaunay(const PointSet& s) {
    const std::size_t n = s.size();
    if (n < 3) throw SizeError("naive_delaunay needs at least 3 points");
    if (all_collinear(s.points())) throw DegenerateInput("naive_delaunay: all points are collinear");
    std::vector<Triangle> tris;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            for (VertexId k = j + 1; k < n; ++k) {
                Triangle t{i, j, k};
                const Sign o = orient(s[i], s[j], s[k]);
                if (o == Sign::Zero) continue;
                if (o == Sign::Negative) std::swap(t[1], t[2]);
                bool empty = true, touching = false;
                for (VertexId d = 0; d < n && empty; ++d) {
                    if (d == i || d == j || d == k) continue;
                    const Sign c = in_circle(s[t[0]], s[t[1]], s[t[2]], s[d]);
                    empty = c != Sign::Positive;
                    touching = touching || c == Sign::Zero;
                }
                if (!empty) continue;
                if (touching) throw DegenerateInput("naive_delaunay: four cocircular points");
                tris.push_back(t);
            }
        }
    }
    return Triangulation::from_triangles(s, std::move(tris));
}

LevelField sampled_level_field(const PointSet& s, const GridSpec& grid) {
    if (grid.nx < 2 || grid.ny < 2) throw RangeError("grid needs at least 2 nodes per axis");
    double x0 = s[0].x, x1 = s[0].x, y0 = s[0].y, y1 = s[0].y;
    for (const Point& p : s) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double mx = grid.margin * std::max(x1 - x0, 1e-12), my = grid.margin * std::max(y1 - y0, 1e-12);
    LevelField f;
    for (std::size_t i = 0; i < grid.nx; ++i)
        f.xs.push_back(x0 - mx + (x1 - x0 + 2 * mx) * double(i) / double(grid.nx - 1));
    for (std::size_t i = 0; i < grid.ny; ++i)
        f.ys.push_back(y0 - my + (y1 - y0 + 2 * my) * double(i) / double(grid.ny - 1));
    f.level.reserve(grid.nx * grid.ny);

    if (s.size() < 3 || all_collinear(s.points())) {
        for (std::size_t iy = 0; iy < grid.ny; ++iy)
            for (std::size_t ix = 0; ix < grid.nx; ++ix) f.level.push_back(query_depth(s, {f.xs[ix], f.ys[iy]}));
        return f;
    }
    const Triangulation t = delaunay(s);
    const DepthLabels d = delaunay_depths(t);
    for (std::size_t iy = 0; iy < grid.ny; ++iy)
        for (std::size_t ix = 0; ix < grid.nx; ++ix) f.level.push_back(query_depth(t, d, {f.xs[ix], f.ys[iy]}));
    return f;
}

PointSet element_uniqueness_gadget(std::span<const double> values) {
    if (values.empty()) throw SizeError("element_uniqueness_gadget needs at least one value");
    std::vector<double> xs(values.begin(), values.end());
    for (double x : xs) {
        if (!std::isfinite(x) || x <= 0.0)
            throw DomainError("element_uniqueness_gadget: values must be positive, got " + std::to_string(x));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Point> pts;
    for (double x : xs) {
        pts.push_back({x, 0.0});
        pts.push_back({0.0, x});
        pts.push_back({-x, 0.0});
        pts.push_back({0.0, -x});
    }
    return PointSet(std::move(pts));
}

std::pair<PointSet, Point> nested_triangle_gadget(int k) {
    if (k < 2) throw RangeError("nested_triangle_gadget needs k >= 2, got " + std::to_string(k));
    // Isosceles triangles with integer vertices m*(0,5), m*(-4,-3), m*(4,-3), all with
    // circumcenter at the origin and circumradius 5m. The scale m runs over k
    // consecutive integers from 4(k-1) to 5(k-1), so the innermost circumradius is 0.8
    // times the outermost one, which exceeds the outer inradius (0.5 times).
    const double m_in = 4.0 * (k - 1), m_out = 5.0 * (k - 1);
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) {
        const double m = m_in + i;
        pts.push_back({0.0, 5.0 * m});
        pts.push_back({-4.0 * m, -3.0 * m});
        pts.push_back({4.0 * m, -3.0 * m});
    }
    PointSet s(std::move(pts));
    // Beyond the outer edge from (4,-3) to (0,5) and within distance 4 m_out of the center.
    const Point p{2.5 * m_out, 1.25 * m_out};
    if (delaunay_depths(s).set_depth != k)
        throw std::logic_error("nested_triangle_gadget: self-check failed for k=" + std::to_string(k));
    return {std::move(s), p};
}

PointSet component_extremal_gadget(int k) {
    if (k < 1) throw RangeError("component_extremal_gadget needs k >= 1, got " + std::to_string(k));
    // The chain is nearly straight and the inner points sit barely above it, so every
    // circle through two consecutive inner points that avoids the chain vertex between
    // them is large enough to swallow the apex.
    const double half = 0.5 * k;
    const double bend = 1e-3 / (double(k) * k);
    const double lift = 1e-3 / k;
    std::vector<Point> pts;
    pts.push_back({half, double(k)});
    for (int i = 0; i <= k; ++i) pts.push_back({double(i), bend * (i - half) * (i - half)});
    for (int i = 0; i < k; ++i) {
        const Point& a = pts[1 + i];
        const Point& b = pts[2 + i];
        pts.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y) + lift});
    }
    PointSet s(std::move(pts));
    const Triangulation t = delaunay(s);
    if (component_count(layers(t, delaunay_depths(t))) != static_cast<std::size_t>(k) + 1)
        throw std::logic_error("component_extremal_gadget: self-check failed for k=" + std::to_string(k));
    return s;
}

} // namespace strata
