#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>

namespace strata {

/// Index of a point within a PointSet.
using VertexId = std::uint32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    /// Lexicographic (x, then y).
    friend constexpr auto operator<=>(const Point&, const Point&) = default;

    constexpr Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    constexpr Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    constexpr Point operator*(double s) const { return {x * s, y * s}; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point& a, const Point& b) { return norm(a - b); }

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

struct Circle {
    Point center;
    double radius = 0.0;
    /// Vertices of the Delaunay triangle this circle circumscribes, if any.
    std::optional<std::array<VertexId, 3>> defining_triple;
};

/// Orientation of c relative to the directed line a->b. Exact.
Sign orient(const Point& a, const Point& b, const Point& c);

/// Position of d relative to the circumcircle of the counterclockwise triple (a, b, c):
/// Positive inside, Zero on, Negative outside. Exact.
/// Throws PreconditionViolation if (a, b, c) is not counterclockwise.
Sign in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

/// in_circle without the orientation check; for counterclockwise input only.
Sign in_circle_ccw(const Point& a, const Point& b, const Point& c, const Point& d);

/// Circumscribed circle of a non-collinear triple, computed in floating point.
/// Throws DegenerateInput for collinear triples.
Circle circumcircle(const Point& a, const Point& b, const Point& c);

/// Default boundary tolerance of point_vs_circle: 1e-9 * (1 + radius).
inline double default_circle_tolerance(const Circle& c) { return 1e-9 * (1.0 + c.radius); }

/// Positive if p is inside c by more than `tolerance`, Zero within the band, Negative outside.
Sign point_vs_circle(const Circle& c, const Point& p, double tolerance);
inline Sign point_vs_circle(const Circle& c, const Point& p) {
    return point_vs_circle(c, p, default_circle_tolerance(c));
}

namespace detail {
/// Exact evaluation paths, exposed for tests of the floating-point filter.
Sign orient_exact(const Point& a, const Point& b, const Point& c);
Sign in_circle_exact(const Point& a, const Point& b, const Point& c, const Point& d);
} // namespace detail

} // namespace strata
