#include "strata/contours.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

namespace strata {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double angular_distance(double a, double b) { return std::abs(wrap(a - b + kPi) - kPi); }

} // namespace

double Arc::sweep() const {
    const double s = counterclockwise ? wrap(end_angle - start_angle) : wrap(start_angle - end_angle);
    return s == 0.0 ? kTwoPi : s;
}

Point Arc::point_at(double angle) const {
    return {circle.center.x + circle.radius * std::cos(angle), circle.center.y + circle.radius * std::sin(angle)};
}

Point Arc::interpolate(double fraction) const {
    const double delta = fraction * sweep();
    return point_at(counterclockwise ? start_angle + delta : start_angle - delta);
}

double Arc::distance_to(const Point& p) const {
    const Point v = p - circle.center;
    if (v.x == 0.0 && v.y == 0.0) return circle.radius;
    const double phi = std::atan2(v.y, v.x);
    const double offset = counterclockwise ? wrap(phi - start_angle) : wrap(start_angle - phi);
    if (offset <= sweep()) return std::abs(norm(v) - circle.radius);
    return std::min(distance(p, start()), distance(p, end()));
}

double signed_area(const ArcCurve& curve) {
    double twice = 0.0;
    for (const Arc& a : curve) {
        const double sigma = a.counterclockwise ? 1.0 : -1.0;
        const double t0 = a.start_angle;
        const double t1 = t0 + sigma * a.sweep();
        const double r = a.circle.radius;
        const Point c = a.circle.center;
        twice += r * c.x * (std::sin(t1) - std::sin(t0)) - r * c.y * (std::cos(t1) - std::cos(t0)) +
                 sigma * r * r * a.sweep();
    }
    return 0.5 * twice;
}

int winding_number(const ArcCurve& curve, const Point& p) {
    double total = 0.0;
    for (const Arc& arc : curve) {
        const double sigma = arc.counterclockwise ? 1.0 : -1.0;
        const bool in_disk = distance(p, arc.circle.center) < arc.circle.radius;
        if (arc.sweep() == kTwoPi) {
            if (in_disk) total += sigma * kTwoPi;
            continue;
        }
        // Angle subtended by the chord, corrected by a full turn when p lies between
        // the chord and the arc. Both decisions read the same cross product so the
        // sum stays continuous across the chord.
        const Point a = arc.start() - p;
        const Point b = arc.end() - p;
        const double cr = cross(a, b);
        const double dt = dot(a, b);
        double delta = (cr == 0.0 && dt < 0.0) ? sigma * kPi : std::atan2(cr, dt);
        if (in_disk && sigma * cr < 0.0) delta += sigma * kTwoPi;
        total += delta;
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

namespace {

// Identity of an arc endpoint. Vertex keys name a data point; pair keys name one of
// the two intersections of disks lo < hi, on the right (0) or left (1) of the line
// from the center of lo to the center of hi.
struct EndpointKey {
    std::uint64_t tag = 0;
    std::uint64_t ids = 0;

    static EndpointKey vertex(VertexId v) { return {1, v}; }
    static EndpointKey pair(std::uint32_t lo, std::uint32_t hi, int side) {
        return {2u + static_cast<std::uint64_t>(side), (static_cast<std::uint64_t>(lo) << 32) | hi};
    }
    friend bool operator==(const EndpointKey&, const EndpointKey&) = default;
};

struct EndpointKeyHash {
    std::size_t operator()(const EndpointKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.ids * 0x9E3779B97F4A7C15ull ^ k.tag);
    }
};

struct Disk {
    Point c;
    double r = 0.0;
    std::vector<VertexId> verts;
    Circle circle;
};

struct Interval {
    double s = 0.0;
    double e = 0.0;
    EndpointKey ks;
    EndpointKey ke;
};

// Counterclockwise uncovered arc of one disk, unwrapped so that s < e <= s + 2pi.
struct RawArc {
    std::uint32_t disk = 0;
    double s = 0.0;
    double e = 0.0;
    EndpointKey ks;
    EndpointKey ke;
    bool full = false;
};

std::vector<Disk> merge_disks(std::span<const Circle> circles) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t i = 0; i < circles.size(); ++i) {
        const Circle& c = circles[i];
        if (c.radius > 0.0 && c.center.finite() && std::isfinite(c.radius)) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return circles[a].center.x < circles[b].center.x;
    });
    std::vector<std::uint32_t> parent(circles.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < order.size(); ++a) {
        const Circle& ca = circles[order[a]];
        const double tol = 1e-9 * (1.0 + ca.radius);
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Circle& cb = circles[order[b]];
            if (cb.center.x - ca.center.x > tol) break;
            if (std::abs(cb.center.y - ca.center.y) <= tol && std::abs(cb.radius - ca.radius) <= tol) {
                const std::uint32_t ra = find(order[a]), rb = find(order[b]);
                parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    }
    std::vector<Disk> out;
    std::vector<std::uint32_t> slot(circles.size(), std::numeric_limits<std::uint32_t>::max());
    std::vector<char> valid(circles.size(), 0);
    for (std::uint32_t i : order) valid[i] = 1;
    for (std::uint32_t i = 0; i < circles.size(); ++i) {
        if (!valid[i]) continue;
        const std::uint32_t root = find(i);
        if (slot[root] == std::numeric_limits<std::uint32_t>::max()) {
            slot[root] = static_cast<std::uint32_t>(out.size());
            out.push_back({circles[root].center, circles[root].radius, {}, circles[root]});
        }
        if (const auto& triple = circles[i].defining_triple) {
            auto& verts = out[slot[root]].verts;
            verts.insert(verts.end(), triple->begin(), triple->end());
        }
    }
    for (Disk& d : out) {
        std::sort(d.verts.begin(), d.verts.end());
        d.verts.erase(std::unique(d.verts.begin(), d.verts.end()), d.verts.end());
    }
    return out;
}

// Pairs of disks whose bounding boxes overlap.
std::vector<std::pair<std::uint32_t, std::uint32_t>> candidate_pairs(const std::vector<Disk>& disks) {
    std::vector<std::uint32_t> order(disks.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return disks[a].c.x - disks[a].r < disks[b].c.x - disks[b].r;
    });
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::vector<std::uint32_t> active;
    for (std::uint32_t i : order) {
        const double left = disks[i].c.x - disks[i].r;
        std::erase_if(active, [&](std::uint32_t k) { return disks[k].c.x + disks[k].r < left; });
        for (std::uint32_t k : active) {
            if (std::abs(disks[k].c.y - disks[i].c.y) <= disks[k].r + disks[i].r)
                out.emplace_back(std::min(i, k), std::max(i, k));
        }
        active.push_back(i);
    }
    return out;
}

std::vector<VertexId> shared_vertices(const Disk& a, const Disk& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(), std::back_inserter(out));
    return out;
}

// Moves the interval endpoints that correspond to shared data vertices onto them.
void snap(Interval& iv, const Point& center, std::span<const VertexId> shared, std::span<const Point> vertices) {
    if (shared.empty() || vertices.empty()) return;
    auto angle_of = [&](VertexId v) {
        const Point d = vertices[v] - center;
        return std::atan2(d.y, d.x);
    };
    const double before = iv.e - iv.s;
    if (shared.size() == 1) {
        const double t = angle_of(shared[0]);
        const bool at_start = angular_distance(t, iv.s) <= angular_distance(t, iv.e);
        (at_start ? iv.s : iv.e) = t;
        (at_start ? iv.ks : iv.ke) = EndpointKey::vertex(shared[0]);
        double len = wrap(iv.e - iv.s);
        if (len > before + kPi) {
            // The circles barely overlap and the vertex landed past the other end.
            iv.s = iv.e = t;
            iv.ks = iv.ke = EndpointKey::vertex(shared[0]);
            len = 0.0;
        } else if (len < before - kPi) {
            len += kTwoPi;
        }
        iv.s = wrap(iv.s);
        iv.e = iv.s + len;
        return;
    }
    const double t0 = angle_of(shared[0]), t1 = angle_of(shared[1]);
    const bool direct = angular_distance(t0, iv.s) + angular_distance(t1, iv.e) <=
                        angular_distance(t1, iv.s) + angular_distance(t0, iv.e);
    iv.s = wrap(direct ? t0 : t1);
    iv.ks = EndpointKey::vertex(direct ? shared[0] : shared[1]);
    iv.ke = EndpointKey::vertex(direct ? shared[1] : shared[0]);
    double len = wrap((direct ? t1 : t0) - iv.s);
    if (len < before - kPi) len += kTwoPi;
    iv.e = iv.s + len;
}

// Two disks touching from outside at a data vertex: both boundaries are split there.
Interval touch_point(const Point& center, VertexId v, std::span<const Point> vertices) {
    const Point d = vertices[v] - center;
    const double t = wrap(std::atan2(d.y, d.x));
    return {t, t, EndpointKey::vertex(v), EndpointKey::vertex(v)};
}

// Uncovered arcs of one disk given the angular intervals covered by the others.
void uncovered_arcs(std::uint32_t disk, std::vector<Interval>& ivs, std::vector<RawArc>& out) {
    if (ivs.empty()) {
        out.push_back({disk, 0.0, kTwoPi, {}, {}, true});
        return;
    }
    for (Interval& iv : ivs) {
        if (iv.e - iv.s >= kTwoPi) return;
    }
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.s < b.s; });
    std::vector<Interval> merged;
    for (const Interval& iv : ivs) {
        if (!merged.empty() && iv.s <= merged.back().e) {
            if (iv.e > merged.back().e) {
                merged.back().e = iv.e;
                merged.back().ke = iv.ke;
            }
        } else {
            merged.push_back(iv);
        }
    }
    // Intervals running past 2pi wrap onto the first ones.
    while (merged.size() > 1 && merged.back().e - kTwoPi >= merged.front().s) {
        Interval& last = merged.back();
        const Interval& first = merged.front();
        if (first.e + kTwoPi > last.e) {
            last.e = first.e + kTwoPi;
            last.ke = first.ke;
        }
        merged.erase(merged.begin());
    }
    if (merged.size() == 1 && merged[0].e - merged[0].s >= kTwoPi) return;
    constexpr double kMinGap = 1e-12;
    for (std::size_t m = 0; m < merged.size(); ++m) {
        const Interval& cur = merged[m];
        const bool last = m + 1 == merged.size();
        const Interval& next = last ? merged[0] : merged[m + 1];
        const double next_s = last ? next.s + kTwoPi : next.s;
        if (next_s - cur.e > kMinGap) out.push_back({disk, cur.e, next_s, cur.ke, next.ks, false});
    }
}

double raw_area(const RawArc& a, const std::vector<Disk>& disks) {
    const Disk& d = disks[a.disk];
    return 0.5 * (d.r * d.c.x * (std::sin(a.e) - std::sin(a.s)) - d.r * d.c.y * (std::cos(a.e) - std::cos(a.s)) +
                  d.r * d.r * (a.e - a.s));
}

Point raw_point(const Disk& d, double angle) { return {d.c.x + d.r * std::cos(angle), d.c.y + d.r * std::sin(angle)}; }

struct HoleCurves {
    std::vector<ArcCurve> curves;
    /// -1 for the outer boundary of a hole, otherwise the index of the hole boundary
    /// that encloses this island boundary.
    std::vector<int> parent;
};

HoleCurves hole_curves(std::span<const Circle> circles, std::span<const Point> vertices) {
    HoleCurves out;
    const std::vector<Disk> disks = merge_disks(circles);
    if (disks.size() < 2) return out;

    std::vector<std::vector<Interval>> covered(disks.size());
    std::vector<char> swallowed(disks.size(), 0);
    for (auto [i, k] : candidate_pairs(disks)) {
        const Disk& di = disks[i];
        const Disk& dk = disks[k];
        const Point dv = dk.c - di.c;
        const double d = norm(dv);
        const auto shared = shared_vertices(di, dk);
        if (shared.size() == 1 && !vertices.empty() && d >= di.r + dk.r - 1e-12 * (di.r + dk.r)) {
            covered[i].push_back(touch_point(di.c, shared[0], vertices));
            covered[k].push_back(touch_point(dk.c, shared[0], vertices));
            continue;
        }
        if (d >= di.r + dk.r) continue;
        if (d + di.r <= dk.r) {
            swallowed[i] = 1;
            continue;
        }
        if (d + dk.r <= di.r) {
            swallowed[k] = 1;
            continue;
        }
        const double phi_i = std::atan2(dv.y, dv.x);
        const double phi_k = std::atan2(-dv.y, -dv.x);
        const double alpha_i = std::acos(std::clamp((di.r * di.r + d * d - dk.r * dk.r) / (2 * di.r * d), -1.0, 1.0));
        const double alpha_k = std::acos(std::clamp((dk.r * dk.r + d * d - di.r * di.r) / (2 * dk.r * d), -1.0, 1.0));
        const EndpointKey right = EndpointKey::pair(i, k, 0), left = EndpointKey::pair(i, k, 1);
        Interval on_i{wrap(phi_i - alpha_i), 0.0, right, left};
        on_i.e = on_i.s + 2 * alpha_i;
        Interval on_k{wrap(phi_k - alpha_k), 0.0, left, right};
        on_k.e = on_k.s + 2 * alpha_k;
        if (shared.size() <= 2) {
            snap(on_i, di.c, shared, vertices);
            snap(on_k, dk.c, shared, vertices);
        }
        covered[i].push_back(on_i);
        covered[k].push_back(on_k);
    }

    std::vector<RawArc> arcs;
    for (std::uint32_t i = 0; i < disks.size(); ++i) {
        if (!swallowed[i]) uncovered_arcs(i, covered[i], arcs);
    }

    std::unordered_map<EndpointKey, std::vector<std::uint32_t>, EndpointKeyHash> starts;
    for (std::uint32_t a = 0; a < arcs.size(); ++a) {
        if (!arcs[a].full) starts[arcs[a].ks].push_back(a);
    }
    std::vector<char> used(arcs.size(), 0);

    // Traced curves keep the union on their left, so hole boundaries come out clockwise.
    std::vector<std::vector<std::uint32_t>> loops;
    for (std::uint32_t a0 = 0; a0 < arcs.size(); ++a0) {
        if (used[a0]) continue;
        used[a0] = 1;
        std::vector<std::uint32_t> loop{a0};
        if (arcs[a0].full) {
            loops.push_back(std::move(loop));
            continue;
        }
        bool closed = false;
        std::uint32_t cur = a0;
        for (std::size_t step = 0; step <= arcs.size(); ++step) {
            const RawArc& ca = arcs[cur];
            const Disk& cd = disks[ca.disk];
            const Point in_dir{-std::sin(ca.e), std::cos(ca.e)};
            std::vector<std::uint32_t> cands;
            if (auto it = starts.find(ca.ke); it != starts.end()) {
                for (std::uint32_t b : it->second)
                    if (!used[b] || b == a0) cands.push_back(b);
            }
            if (cands.empty()) {
                // Fall back to the nearest free start point.
                const Point end = raw_point(cd, ca.e);
                double best = 1e-6 * (1.0 + cd.r);
                for (std::uint32_t b = 0; b < arcs.size(); ++b) {
                    if ((used[b] && b != a0) || arcs[b].full) continue;
                    const double dist = distance(end, raw_point(disks[arcs[b].disk], arcs[b].s));
                    if (dist < best) {
                        best = dist;
                        cands.assign(1, b);
                    }
                }
            }
            if (cands.empty()) break;
            std::uint32_t next = cands[0];
            if (cands.size() > 1) {
                // Several boundary pieces meet here: leave along the first one found by
                // turning counterclockwise from the reversed incoming direction.
                const Point back{-in_dir.x, -in_dir.y};
                double best = std::numeric_limits<double>::infinity();
                for (std::uint32_t b : cands) {
                    const Point out_dir{-std::sin(arcs[b].s), std::cos(arcs[b].s)};
                    // A turn of zero is a cusp between disks touching at this point.
                    double turn = std::atan2(cross(back, out_dir), dot(back, out_dir));
                    if (turn < -1e-9) turn += kTwoPi;
                    if (turn < best) {
                        best = turn;
                        next = b;
                    }
                }
            }
            if (next == a0) {
                closed = true;
                break;
            }
            used[next] = 1;
            loop.push_back(next);
            cur = next;
        }
        if (closed) loops.push_back(std::move(loop));
    }

    // Reverse every loop so the uncovered side is on the left.
    std::vector<double> areas;
    for (const auto& loop : loops) {
        double area = 0.0;
        ArcCurve curve;
        for (auto it = loop.rbegin(); it != loop.rend(); ++it) {
            const RawArc& ra = arcs[*it];
            area -= raw_area(ra, disks);
            Arc arc{disks[ra.disk].circle, wrap(ra.e), wrap(ra.s), false};
            if (ra.full) arc.start_angle = arc.end_angle = 0.0;
            curve.push_back(arc);
        }
        out.curves.push_back(std::move(curve));
        areas.push_back(area);
    }

    // Hole boundaries have positive area. Negative loops are outer boundaries of union
    // components; those lying inside a hole are islands of that hole.
    std::vector<int> parent(out.curves.size(), -2);
    std::vector<std::size_t> holes;
    for (std::size_t c = 0; c < out.curves.size(); ++c) {
        if (areas[c] > 0) {
            parent[c] = -1;
            holes.push_back(c);
        }
    }
    for (std::size_t c = 0; c < out.curves.size(); ++c) {
        if (areas[c] > 0) continue;
        const Point probe = out.curves[c].front().interpolate(0.5);
        double smallest = std::numeric_limits<double>::infinity();
        for (std::size_t h : holes) {
            if (areas[h] < smallest && winding_number(out.curves[h], probe) != 0) {
                smallest = areas[h];
                parent[c] = static_cast<int>(h);
            }
        }
    }
    HoleCurves kept;
    std::vector<int> remap(out.curves.size(), -1);
    for (std::size_t c = 0; c < out.curves.size(); ++c) {
        if (parent[c] == -1) {
            remap[c] = static_cast<int>(kept.curves.size());
            kept.curves.push_back(std::move(out.curves[c]));
            kept.parent.push_back(-1);
        }
    }
    for (std::size_t c = 0; c < parent.size(); ++c) {
        if (parent[c] >= 0) {
            kept.curves.push_back(std::move(out.curves[c]));
            kept.parent.push_back(remap[parent[c]]);
        }
    }
    return kept;
}

// A point just inside the uncovered side of a hole boundary, off its longest arc.
std::vector<Point> interior_probes(const ArcCurve& curve) {
    std::vector<std::size_t> order(curve.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return curve[a].sweep() * curve[a].circle.radius > curve[b].sweep() * curve[b].circle.radius;
    });
    std::vector<Point> out;
    for (std::size_t k = 0; k < std::min<std::size_t>(3, order.size()); ++k) {
        const Arc& arc = curve[order[k]];
        const double r = arc.circle.radius;
        const double sagitta = r * (1.0 - std::cos(0.5 * std::min(arc.sweep(), kPi)));
        const double offset = std::min(1e-3 * r, 0.1 * sagitta);
        const Point m = arc.interpolate(0.5);
        const Point u = (m - arc.circle.center) * (1.0 / r);
        // Clockwise arcs have their uncovered side outside the circle.
        const double sign = arc.counterclockwise ? -1.0 : 1.0;
        out.push_back(m + u * (sign * offset));
    }
    return out;
}

double set_extent(const PointSet& s) {
    double x0 = s[0].x, x1 = s[0].x, y0 = s[0].y, y1 = s[0].y;
    for (const Point& p : s) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

double segment_distance(const Point& a, const Point& b, const Point& p) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + ab * t);
}

double polygon_distance(const std::vector<Point>& poly, const Point& p) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    if (poly.size() == 1) return distance(poly[0], p);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) best = std::min(best, segment_distance(poly[i], poly[(i + 1) % poly.size()], p));
    return best;
}

bool strictly_inside_convex(const std::vector<Point>& poly, const Point& p) {
    if (poly.size() < 3) return false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orient(poly[i], poly[(i + 1) % poly.size()], p) != Sign::Positive) return false;
    }
    return true;
}

double curves_distance(const std::vector<ArcCurve>& curves, const Point& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const ArcCurve& c : curves)
        for (const Arc& a : c) best = std::min(best, a.distance_to(p));
    return best;
}

std::vector<Point> flatten(const ArcCurve& curve) {
    constexpr int kSegments = 64;
    std::vector<Point> out;
    for (const Arc& a : curve)
        for (int i = 0; i < kSegments; ++i) out.push_back(a.interpolate(double(i) / kSegments));
    return out;
}

// Signed area and area-weighted centroid of a closed polygon.
std::pair<double, Point> polygon_moments(const std::vector<Point>& poly) {
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    const Point o = poly.empty() ? Point{} : poly[0];
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i] - o, q = poly[(i + 1) % poly.size()] - o;
        const double w = cross(p, q);
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (a2 == 0.0) return {0.0, o};
    return {0.5 * a2, Point{o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2)}};
}

} // namespace

namespace {

// Level j >= 2 whose boundary uses this triangle's circle, or 0.
int boundary_level(const Triangle& tr, const DepthLabels& d) {
    std::array<int, 3> ds{d.depth[tr[0]], d.depth[tr[1]], d.depth[tr[2]]};
    std::sort(ds.begin(), ds.end());
    return ds[1] == ds[2] && ds[0] == ds[1] - 1 ? ds[1] : 0;
}

Circle labelled_circle(const Triangulation& t, const Triangle& tr) {
    Circle c = circumcircle(t.point(tr[0]), t.point(tr[1]), t.point(tr[2]));
    c.defining_triple = tr;
    return c;
}

} // namespace

std::vector<Circle> boundary_circles(const Triangulation& t, const DepthLabels& d, int j) {
    if (j < 2 || j > d.set_depth)
        throw RangeError("boundary_circles: level " + std::to_string(j) + " outside 2.." + std::to_string(d.set_depth));
    std::vector<Circle> out;
    for (const Triangle& tr : t.triangles()) {
        if (boundary_level(tr, d) == j) out.push_back(labelled_circle(t, tr));
    }
    return out;
}

std::vector<ArcCurve> union_hole_boundary(std::span<const Circle> disks, std::span<const Point> vertices) {
    return hole_curves(disks, vertices).curves;
}

int level_from_disks(const Triangulation& t, const DepthLabels& d, const Point& p) {
    const auto conflict = t.conflict_region(p);
    if (conflict.coincident) return d.depth[*conflict.coincident];
    if (conflict.outside_hull) return 1;
    int shallowest = std::numeric_limits<int>::max();
    for (VertexId v : conflict.vertices) shallowest = std::min(shallowest, d.depth[v]);
    return shallowest + 1;
}

LevelSet depth_contours(const Triangulation& t, const DepthLabels& d) {
    LevelSet ls;
    ls.depth_of_set = d.set_depth;
    ls.tolerance = 1e-9 * (1.0 + set_extent(t.point_set()));
    DepthContour hull;
    hull.level = 1;
    for (VertexId v : convex_hull(t.point_set())) hull.polygon.push_back(t.point(v));
    ls.contours.push_back(std::move(hull));

    const auto vertices = t.point_set().points();
    std::vector<std::vector<Circle>> by_level(static_cast<std::size_t>(d.set_depth) + 1);
    for (const Triangle& tr : t.triangles()) {
        if (const int j = boundary_level(tr, d)) by_level[static_cast<std::size_t>(j)].push_back(labelled_circle(t, tr));
    }
    for (int j = 2; j <= d.set_depth; ++j) {
        const std::vector<Circle>& circles = by_level[static_cast<std::size_t>(j)];
        if (circles.empty()) break;
        HoleCurves h = hole_curves(circles, vertices);
        // Keep holes whose interior is deeper than j, with their islands.
        std::vector<char> keep(h.curves.size(), 0);
        for (std::size_t c = 0; c < h.curves.size(); ++c) {
            if (h.parent[c] != -1) continue;
            for (const Point& probe : interior_probes(h.curves[c])) {
                if (level_from_disks(t, d, probe) > j) {
                    keep[c] = 1;
                    break;
                }
            }
        }
        DepthContour contour;
        contour.level = j;
        for (std::size_t c = 0; c < h.curves.size(); ++c) {
            const bool kept = h.parent[c] == -1 ? keep[c] : keep[static_cast<std::size_t>(h.parent[c])];
            if (kept) contour.curves.push_back(std::move(h.curves[c]));
        }
        if (contour.curves.empty()) break;
        ls.contours.push_back(std::move(contour));
    }
    return ls;
}

LevelSet depth_contours(const PointSet& s) {
    if (s.size() >= 3 && !all_collinear(s.points())) {
        const Triangulation t = delaunay(s);
        return depth_contours(t, delaunay_depths(t));
    }
    LevelSet ls;
    ls.depth_of_set = 1;
    ls.tolerance = 1e-9 * (1.0 + set_extent(s));
    DepthContour hull;
    for (VertexId v : convex_hull(s)) hull.polygon.push_back(s[v]);
    ls.contours.push_back(std::move(hull));
    return ls;
}

Classification classify(const LevelSet& ls, const Point& p) {
    if (ls.contours.empty()) return {};
    const std::vector<Point>& hull = ls.contours[0].polygon;
    if (hull.size() < 3) return {};
    if (polygon_distance(hull, p) <= ls.tolerance) return {1, 2};
    if (!strictly_inside_convex(hull, p)) return {};
    for (std::size_t k = 1; k < ls.contours.size(); ++k) {
        const DepthContour& c = ls.contours[k];
        if (curves_distance(c.curves, p) <= ls.tolerance) return {c.level, c.level + 1};
        int w = 0;
        for (const ArcCurve& curve : c.curves) w += winding_number(curve, p);
        if (w == 0) return {c.level, std::nullopt};
    }
    return {static_cast<int>(ls.contours.size()) + 1, std::nullopt};
}

double contour_distance(const LevelSet& ls, const Point& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const DepthContour& c : ls.contours) {
        best = std::min(best, polygon_distance(c.polygon, p));
        best = std::min(best, curves_distance(c.curves, p));
    }
    return best;
}

std::vector<Point> medians(const LevelSet& ls) {
    if (ls.contours.empty()) return {};
    const DepthContour& deepest = ls.contours.back();
    if (deepest.level == 1) {
        const auto& poly = deepest.polygon;
        if (poly.size() >= 3) return {polygon_moments(poly).second};
        Point sum{};
        for (const Point& q : poly) sum = sum + q;
        return {sum * (1.0 / double(poly.size()))};
    }
    std::vector<std::pair<double, Point>> moments;
    for (const ArcCurve& c : deepest.curves) moments.push_back(polygon_moments(flatten(c)));
    std::vector<Point> out;
    for (std::size_t i = 0; i < deepest.curves.size(); ++i) {
        if (moments[i].first <= 0) continue;
        double area = moments[i].first;
        Point weighted = moments[i].second * area;
        for (std::size_t k = 0; k < deepest.curves.size(); ++k) {
            if (moments[k].first >= 0) continue;
            if (winding_number(deepest.curves[i], deepest.curves[k].front().interpolate(0.5)) == 0) continue;
            area += moments[k].first;
            weighted = weighted + moments[k].second * moments[k].first;
        }
        out.push_back(weighted * (1.0 / area));
    }
    return out;
}

} // namespace strata
