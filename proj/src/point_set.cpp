#include "strata/point_set.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace strata {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw SizeError("point set must contain at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!points_[i].finite()) {
            throw DomainError("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
    std::vector<VertexId> order(points_.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return points_[a] < points_[b] || (points_[a] == points_[b] && a < b);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points_[order[k - 1]] == points_[order[k]]) {
            throw DuplicatePoint("points " + std::to_string(order[k - 1]) + " and " +
                                     std::to_string(order[k]) + " coincide",
                                 order[k - 1], order[k]);
        }
    }
}

std::optional<VertexId> PointSet::find(const Point& p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    if (it == points_.end()) return std::nullopt;
    return static_cast<VertexId>(it - points_.begin());
}

PointSet PointSet::with(const Point& p) const {
    if (!p.finite()) throw DomainError("inserted point has a non-finite coordinate");
    if (auto existing = find(p)) {
        throw DuplicatePoint("point coincides with existing point " + std::to_string(*existing),
                             *existing, points_.size());
    }
    std::vector<Point> pts = points_;
    pts.push_back(p);
    return PointSet(std::move(pts), Trusted{});
}

bool all_collinear(std::span<const Point> points) {
    if (points.size() <= 2) return true;
    const Point& a = points[0];
    // Points are not assumed distinct here; pick the first point differing from a.
    std::size_t j = 1;
    while (j < points.size() && points[j] == a) ++j;
    if (j == points.size()) return true;
    const Point& b = points[j];
    for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (orient(a, b, points[k]) != Sign::Zero) return false;
    }
    return true;
}

} // namespace strata
