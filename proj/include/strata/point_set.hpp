#pragma once

#include "strata/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace strata {

/// Immutable indexed collection of distinct, finite planar points (n >= 1).
class PointSet {
public:
    /// Throws SizeError when empty, DomainError for non-finite coordinates and
    /// DuplicatePoint when two points coincide exactly.
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](VertexId i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Index of a point with exactly these coordinates, if present. Linear scan.
    std::optional<VertexId> find(const Point& p) const;

    /// Copy with `p` appended as index size(). Throws DuplicatePoint if p is present.
    PointSet with(const Point& p) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    struct Trusted {};
    PointSet(std::vector<Point> points, Trusted) : points_(std::move(points)) {}

    std::vector<Point> points_;
};

/// True when every point lies on one line (always true for n <= 2).
bool all_collinear(std::span<const Point> points);

} // namespace strata
