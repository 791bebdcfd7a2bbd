#include "strata/alt_depth.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

namespace {

// Monotone chain over points already sorted lexicographically. With keep_collinear the
// chains retain points inside hull edges; the result may then list a point twice.
std::vector<VertexId> chain(const PointSet& s, const std::vector<VertexId>& sorted, bool keep_collinear) {
    const std::size_t n = sorted.size();
    if (n <= 2) return sorted;
    auto bad = [&](VertexId a, VertexId b, VertexId c) {
        const Sign o = orient(s[a], s[b], s[c]);
        return keep_collinear ? o == Sign::Negative : o != Sign::Positive;
    };
    std::vector<VertexId> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && bad(h[k - 2], h[k - 1], sorted[i])) --k;
        h[k++] = sorted[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && bad(h[k - 2], h[k - 1], sorted[i])) --k;
        h[k++] = sorted[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace

ConvexDepthLabels convex_depths(const PointSet& s) {
    ConvexDepthLabels out;
    out.depth.assign(s.size(), 0);
    std::vector<VertexId> remaining(s.size());
    std::iota(remaining.begin(), remaining.end(), VertexId{0});
    std::sort(remaining.begin(), remaining.end(), [&](VertexId a, VertexId b) { return s[a] < s[b]; });

    int round = 0;
    while (!remaining.empty()) {
        ++round;
        for (VertexId v : chain(s, remaining, true)) out.depth[v] = round;
        std::vector<VertexId> boundary, rest;
        for (VertexId v : remaining) (out.depth[v] == round ? boundary : rest).push_back(v);
        out.layers.push_back(chain(s, boundary, false));
        remaining = std::move(rest);
    }
    return out;
}

TukeyDepthValue tukey_depth(const PointSet& s, const Point& p) {
    if (!p.finite()) throw DomainError("query point must have finite coordinates");
    std::vector<Point> dirs;
    dirs.reserve(s.size());
    for (const Point& q : s)
        if (!(q == p)) dirs.push_back(q);
    if (dirs.empty()) return {};

    // Exact angular order around p, starting at the positive x direction.
    auto upper = [&](const Point& q) { return q.y > p.y || (q.y == p.y && q.x > p.x); };
    std::sort(dirs.begin(), dirs.end(), [&](const Point& a, const Point& b) {
        const bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        return orient(p, a, b) == Sign::Positive;
    });

    // Classes of equal direction.
    std::vector<Point> rep;
    std::vector<int> count;
    for (const Point& q : dirs) {
        if (!rep.empty() && upper(rep.back()) == upper(q) && orient(p, rep.back(), q) == Sign::Zero) {
            ++count.back();
        } else {
            rep.push_back(q);
            count.push_back(1);
        }
    }
    const std::size_t m = rep.size();
    const int total = static_cast<int>(dirs.size());
    std::vector<int> prefix(2 * m + 1, 0);
    for (std::size_t i = 0; i < 2 * m; ++i) prefix[i + 1] = prefix[i] + count[i % m];

    int best = total + 1;
    Point witness{0.0, 1.0};
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
        j = std::max(j, i + 1);
        while (j < i + m && orient(p, rep[i], rep[j % m]) == Sign::Positive) ++j;
        const int left = prefix[j] - prefix[i + 1];
        const bool opposite = j < i + m && orient(p, rep[i], rep[j % m]) == Sign::Zero;
        const int right = total - count[i] - left - (opposite ? count[j % m] : 0);
        const Point d = rep[i] - p;
        const double len = norm(d);
        if (left < best) {
            best = left;
            witness = {-d.y / len, d.x / len};
        }
        if (right < best) {
            best = right;
            witness = {d.y / len, -d.x / len};
        }
    }
    return {best + 1, witness};
}

} // namespace strata
