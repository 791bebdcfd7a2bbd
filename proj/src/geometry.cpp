#include "strata/geometry.hpp"

#include "strata/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace strata {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0; // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kInCircleBound = (10.0 + 96.0 * kEps) * kEps;

// Outside this magnitude window the static error bounds can be invalidated by
// underflow or overflow of intermediate products.
constexpr double kTiny = 1e-140;
constexpr double kHuge = 1e140;

template <typename T>
Sign sign_of(const T& v) {
    if (v > 0) return Sign::Positive;
    if (v < 0) return Sign::Negative;
    return Sign::Zero;
}

bool in_safe_range(double v) { return v == 0.0 || (v > kTiny && v < kHuge); }

} // namespace

namespace detail {

Sign orient_exact(const Point& a, const Point& b, const Point& c) {
    const Rational acx = Rational(a.x) - Rational(c.x);
    const Rational bcx = Rational(b.x) - Rational(c.x);
    const Rational acy = Rational(a.y) - Rational(c.y);
    const Rational bcy = Rational(b.y) - Rational(c.y);
    return sign_of(acx * bcy - acy * bcx);
}

Sign in_circle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Rational adx = Rational(a.x) - Rational(d.x);
    const Rational ady = Rational(a.y) - Rational(d.y);
    const Rational bdx = Rational(b.x) - Rational(d.x);
    const Rational bdy = Rational(b.y) - Rational(d.y);
    const Rational cdx = Rational(c.x) - Rational(d.x);
    const Rational cdy = Rational(c.y) - Rational(d.y);
    const Rational alift = adx * adx + ady * ady;
    const Rational blift = bdx * bdx + bdy * bdy;
    const Rational clift = cdx * cdx + cdy * cdy;
    const Rational det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                         clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

} // namespace detail

Sign orient(const Point& a, const Point& b, const Point& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    if (in_safe_range(detsum) && std::fabs(det) > kOrientBound * detsum) return sign_of(det);
    if (detsum == 0.0 && in_safe_range(a.x - c.x) && in_safe_range(a.y - c.y) &&
        in_safe_range(b.x - c.x) && in_safe_range(b.y - c.y)) {
        return Sign::Zero;
    }
    return detail::orient_exact(a, b, c);
}

Sign in_circle_ccw(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    if (in_safe_range(permanent) && std::fabs(det) > kInCircleBound * permanent) {
        return sign_of(det);
    }
    return detail::in_circle_exact(a, b, c, d);
}

Sign in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (orient(a, b, c) != Sign::Positive) {
        throw PreconditionViolation("in_circle: (a, b, c) must be counterclockwise");
    }
    return in_circle_ccw(a, b, c, d);
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
    if (orient(a, b, c) == Sign::Zero) {
        throw DegenerateInput("circumcircle: collinear triple has no circumscribed circle");
    }
    const Point ab = b - a;
    const Point ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const Point offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    return Circle{a + offset, norm(offset), std::nullopt};
}

Sign point_vs_circle(const Circle& c, const Point& p, double tolerance) {
    const double dist = distance(p, c.center);
    if (dist < c.radius - tolerance) return Sign::Positive;
    if (dist > c.radius + tolerance) return Sign::Negative;
    return Sign::Zero;
}

} // namespace strata
