#include "strata/contours.hpp"
#include "strata/errors.hpp"
#include "strata/oracle.hpp"
#include "strata/query.hpp"

#include "support/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace strata;

namespace {

constexpr double kPi = std::numbers::pi;

Circle disk(double x, double y, double r) { return Circle{{x, y}, r, std::nullopt}; }

// Bounding box of the set, slightly enlarged.
std::pair<Point, Point> sample_box(const PointSet& s) {
    Point lo = s[0], hi = s[0];
    for (const Point& p : s) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    const double mx = 0.05 * (hi.x - lo.x), my = 0.05 * (hi.y - lo.y);
    return {{lo.x - mx, lo.y - my}, {hi.x + mx, hi.y + my}};
}

std::vector<Point> samples(std::mt19937_64& rng, const PointSet& s, int count) {
    const auto [lo, hi] = sample_box(s);
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) out.push_back({ux(rng), uy(rng)});
    return out;
}

// Level of p by brute force over all triangles: p is deeper than j exactly when it
// is inside the hull and outside every circumdisk of a triangle touching layers < j.
int level_by_disk_grouping(const Triangulation& t, const DepthLabels& d, const Point& p) {
    const auto conflict = t.conflict_region(p);
    if (conflict.outside_hull) return 1;
    int level = d.set_depth + 1;
    for (const Triangle& tr : t.triangles()) {
        const int shallow = std::min({d.depth[tr[0]], d.depth[tr[1]], d.depth[tr[2]]});
        if (in_circle(t.point(tr[0]), t.point(tr[1]), t.point(tr[2]), p) == Sign::Positive)
            level = std::min(level, shallow + 1);
    }
    return level;
}

// Bounded components of the complement of a union of disks, found by flood fill on
// a raster covering the disks with a one-cell margin. Components of a few cells are
// aliasing in narrow cusps and are not counted.
int raster_hole_count(const std::vector<Circle>& disks, int cells) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const Circle& c : disks) {
        x0 = std::min(x0, c.center.x - c.radius);
        x1 = std::max(x1, c.center.x + c.radius);
        y0 = std::min(y0, c.center.y - c.radius);
        y1 = std::max(y1, c.center.y + c.radius);
    }
    const double h = std::max(x1 - x0, y1 - y0) / cells;
    const int nx = static_cast<int>((x1 - x0) / h) + 3, ny = static_cast<int>((y1 - y0) / h) + 3;
    std::vector<int> label(static_cast<std::size_t>(nx * ny), 0);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const Point p{x0 + (ix - 1) * h, y0 + (iy - 1) * h};
            for (const Circle& c : disks)
                if (distance(p, c.center) <= c.radius) label[iy * nx + ix] = -1;
        }
    int components = 0, holes = 0;
    for (int start = 0; start < nx * ny; ++start) {
        if (label[start] != 0) continue;
        ++components;
        int size = 1;
        std::vector<int> stack{start};
        label[start] = components;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            const int cx = c % nx, cy = c / nx;
            const int nb[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            for (const auto& o : nb) {
                const int x = cx + o[0], y = cy + o[1];
                if (x < 0 || y < 0 || x >= nx || y >= ny || label[y * nx + x] != 0) continue;
                label[y * nx + x] = components;
                stack.push_back(y * nx + x);
                ++size;
            }
        }
        if (components > 1 && size >= 10) ++holes;
    }
    return holes;
}

// True when no two circles nearly touch and no circle passes near a crossing of two
// others, so every piece of the complement is wide enough for the raster.
bool well_separated(const std::vector<Circle>& disks, double margin) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t k = i + 1; k < disks.size(); ++k) {
            const Circle& a = disks[i];
            const Circle& b = disks[k];
            const double d = distance(a.center, b.center);
            if (std::abs(d - a.radius - b.radius) < margin || std::abs(d - std::abs(a.radius - b.radius)) < margin)
                return false;
            if (d >= a.radius + b.radius || d <= std::abs(a.radius - b.radius)) continue;
            const double along = (a.radius * a.radius - b.radius * b.radius + d * d) / (2 * d);
            const double h = std::sqrt(a.radius * a.radius - along * along);
            const Point u = (b.center - a.center) * (1.0 / d);
            const Point base = a.center + u * along;
            for (const Point x : {base + Point{-u.y, u.x} * h, base - Point{-u.y, u.x} * h}) {
                for (std::size_t m = 0; m < disks.size(); ++m) {
                    if (m != i && m != k && std::abs(distance(x, disks[m].center) - disks[m].radius) < margin)
                        return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST(UnionHoleBoundary, RasterOracle) {
    const std::vector<Circle> covered{disk(0, 0, 1.2), disk(2, 0, 1.2), disk(1, 1.732, 1.2)};
    EXPECT_EQ(raster_hole_count(covered, 400), 0);
    EXPECT_TRUE(union_hole_boundary(covered).empty());
    const std::vector<Circle> open{disk(0, 0, 1.1), disk(2, 0, 1.1), disk(1, 1.732, 1.1)};
    EXPECT_EQ(raster_hole_count(open, 400), 1);
    EXPECT_EQ(union_hole_boundary(open).size(), 1u);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> pos(0.0, 10.0), rad(0.8, 2.0);
    for (int trial = 0; trial < 40;) {
        std::vector<Circle> disks;
        for (int i = 0; i < 12; ++i) {
            const double x = pos(rng), y = pos(rng);
            disks.push_back(disk(x, y, rad(rng)));
        }
        if (!well_separated(disks, 0.1)) continue;
        ++trial;
        int holes = 0;
        for (const auto& c : union_hole_boundary(disks)) holes += signed_area(c) > 0;
        EXPECT_EQ(holes, raster_hole_count(disks, 800)) << trial;
    }
}

TEST(UnionHoleBoundary, ThreeDiskExample) {
    const std::vector<Circle> disks{disk(0, 0, 1.1), disk(2, 0, 1.1), disk(1, 1.732, 1.1)};
    const auto curves = union_hole_boundary(disks);
    ASSERT_EQ(curves.size(), 1u);
    EXPECT_EQ(curves[0].size(), 3u);
    EXPECT_GT(signed_area(curves[0]), 0.0);
    EXPECT_EQ(winding_number(curves[0], {1.0, 0.577}), 1);
    EXPECT_EQ(winding_number(curves[0], {5.0, 5.0}), 0);
    for (const Arc& a : curves[0]) {
        EXPECT_FALSE(a.counterclockwise);
        EXPECT_LT(a.sweep(), kPi);
    }
    // Consecutive arcs meet.
    for (std::size_t i = 0; i < curves[0].size(); ++i) {
        const Arc& a = curves[0][i];
        const Arc& b = curves[0][(i + 1) % curves[0].size()];
        EXPECT_NEAR(distance(a.end(), b.start()), 0.0, 1e-9);
    }
}

TEST(UnionHoleBoundary, NoHole) {
    const std::vector<Circle> one{disk(0, 0, 1)};
    EXPECT_TRUE(union_hole_boundary(one).empty());
    const std::vector<Circle> two{disk(0, 0, 1), disk(1, 0, 1)};
    EXPECT_TRUE(union_hole_boundary(two).empty());
    EXPECT_TRUE(union_hole_boundary({}).empty());
    const std::vector<Circle> apart{disk(0, 0, 1), disk(5, 0, 1), disk(2.5, 4, 1)};
    EXPECT_TRUE(union_hole_boundary(apart).empty());
}

TEST(UnionHoleBoundary, HoleWithIsland) {
    std::vector<Circle> disks;
    for (int i = 0; i < 8; ++i) {
        const double a = 2 * kPi * i / 8;
        disks.push_back(disk(2.5 * std::cos(a), 2.5 * std::sin(a), 1.0));
    }
    disks.push_back(disk(0, 0, 0.5));
    const auto curves = union_hole_boundary(disks);
    ASSERT_EQ(curves.size(), 2u);
    int holes = 0, islands = 0;
    for (const auto& c : curves) (signed_area(c) > 0 ? holes : islands)++;
    EXPECT_EQ(holes, 1);
    EXPECT_EQ(islands, 1);
    int w = 0;
    for (const auto& c : curves) w += winding_number(c, {0.0, 0.0});
    EXPECT_EQ(w, 0);
    w = 0;
    for (const auto& c : curves) w += winding_number(c, {1.0, 0.0});
    EXPECT_EQ(w, 1);
}

TEST(UnionHoleBoundary, DuplicateDisksMerge) {
    const std::vector<Circle> disks{disk(0, 0, 1.1), disk(2, 0, 1.1), disk(1, 1.732, 1.1), disk(2, 0, 1.1)};
    const auto curves = union_hole_boundary(disks);
    ASSERT_EQ(curves.size(), 1u);
    EXPECT_EQ(curves[0].size(), 3u);
}

TEST(Arc, Geometry) {
    const Arc full{disk(1, 1, 2), 0.0, 0.0, true};
    EXPECT_DOUBLE_EQ(full.sweep(), 2 * kPi);
    EXPECT_NEAR(signed_area({full}), 4 * kPi, 1e-12);
    EXPECT_EQ(winding_number({full}, {1.5, 1.0}), 1);
    EXPECT_EQ(winding_number({full}, {4.0, 1.0}), 0);
    const Arc cw{disk(1, 1, 2), 0.0, 0.0, false};
    EXPECT_NEAR(signed_area({cw}), -4 * kPi, 1e-12);
    EXPECT_EQ(winding_number({cw}, {1.5, 1.0}), -1);

    const Arc quarter{disk(0, 0, 1), 0.0, kPi / 2, true};
    EXPECT_NEAR(quarter.sweep(), kPi / 2, 1e-15);
    EXPECT_NEAR(quarter.distance_to({2, 2}), std::sqrt(8.0) - 1, 1e-12);
    EXPECT_NEAR(quarter.distance_to({0, -1}), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(quarter.interpolate(0.5).x, std::sqrt(0.5), 1e-12);
    const Arc back{disk(0, 0, 1), kPi / 2, 0.0, false};
    EXPECT_NEAR(back.sweep(), kPi / 2, 1e-15);
    EXPECT_NEAR(back.interpolate(0.5).y, std::sqrt(0.5), 1e-12);
}

TEST(BoundaryCircles, Examples) {
    const PointSet sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    const Triangulation t = delaunay(sq);
    const DepthLabels d = delaunay_depths(t);
    ASSERT_EQ(d.set_depth, 2);
    EXPECT_TRUE(boundary_circles(t, d, 2).empty());
    EXPECT_THROW(boundary_circles(t, d, 1), RangeError);
    EXPECT_THROW(boundary_circles(t, d, 3), RangeError);

    const auto [nested, p] = nested_triangle_gadget(4);
    const Triangulation tn = delaunay(nested);
    const DepthLabels dn = delaunay_depths(tn);
    for (int j = 2; j <= dn.set_depth; ++j) {
        const auto circles = boundary_circles(tn, dn, j);
        EXPECT_FALSE(circles.empty());
        for (const Circle& c : circles) {
            ASSERT_TRUE(c.defining_triple.has_value());
            std::array<int, 3> ds{};
            for (int k = 0; k < 3; ++k) ds[k] = dn.depth[(*c.defining_triple)[k]];
            std::sort(ds.begin(), ds.end());
            EXPECT_EQ(ds, (std::array<int, 3>{j - 1, j, j}));
        }
    }
}

TEST(DepthContours, SquareWithCenter) {
    const PointSet sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    const LevelSet ls = depth_contours(sq);
    ASSERT_EQ(ls.contours.size(), 1u);
    EXPECT_EQ(ls.contours[0].level, 1);
    EXPECT_EQ(ls.contours[0].polygon.size(), 4u);
    EXPECT_EQ(ls.level_count(), 2);
    EXPECT_EQ(classify(ls, {1, 1}).level, 2);
    EXPECT_FALSE(classify(ls, {1, 1}).ambiguous());
    EXPECT_EQ(classify(ls, {5, 5}).level, 1);
    const auto edge = classify(ls, {0, 2});
    EXPECT_TRUE(edge.ambiguous());
    EXPECT_EQ(edge.level, 1);
    EXPECT_EQ(edge.alternative, 2);
    const auto m = medians(ls);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_NEAR(m[0].x, 2.0, 1e-12);
    EXPECT_NEAR(m[0].y, 2.0, 1e-12);
}

TEST(DepthContours, NestedTriangles) {
    const auto [s, p] = nested_triangle_gadget(10);
    ASSERT_EQ(s.size(), 30u);
    const LevelSet ls = depth_contours(s);
    ASSERT_EQ(ls.contours.size(), 10u);
    for (int j = 0; j < 10; ++j) EXPECT_EQ(ls.contours[j].level, j + 1);
    EXPECT_EQ(ls.level_count(), 11);
    // The triangles share the origin as circumcenter.
    EXPECT_EQ(classify(ls, {0, 0}).level, 11);
    const auto m = medians(ls);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_NEAR(m[0].x, 0.0, 1e-6);
}

TEST(DepthContours, DegenerateSets) {
    const LevelSet one = depth_contours(PointSet({{1, 1}}));
    EXPECT_EQ(one.level_count(), 2);
    EXPECT_EQ(classify(one, {1, 1}).level, 1);
    const LevelSet line = depth_contours(PointSet({{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(classify(line, {1, 1}).level, 1);
    EXPECT_EQ(classify(line, {5, 0}).level, 1);
}

TEST(DepthContours, LevelFormulaMatchesInsertion) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const PointSet s(test::uniform_points(rng, 30 + trial * 5));
        const Triangulation t = delaunay(s);
        const DepthLabels d = delaunay_depths(t);
        for (const Point& p : samples(rng, s, 100)) {
            EXPECT_EQ(level_from_disks(t, d, p), query_depth(t, d, p));
            EXPECT_EQ(level_by_disk_grouping(t, d, p), query_depth(t, d, p));
        }
    }
}

TEST(DepthContours, ClassifyAgreesWithQueryDepth) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const PointSet s(test::uniform_points(rng, 20 + 10 * trial));
        const Triangulation t = delaunay(s);
        const DepthLabels d = delaunay_depths(t);
        const LevelSet ls = depth_contours(t, d);
        EXPECT_TRUE(ls.level_count() == d.set_depth || ls.level_count() == d.set_depth + 1);
        for (const Point& p : samples(rng, s, 250)) {
            const Classification c = classify(ls, p);
            const int q = query_depth(t, d, p);
            if (c.ambiguous())
                EXPECT_TRUE(q == c.level || q == *c.alternative) << trial;
            else
                EXPECT_EQ(c.level, q) << "trial " << trial << " at " << p.x << "," << p.y;
        }
    }
}

TEST(DepthContours, IntegerGridSets) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const PointSet s(test::grid_points(rng, 30 + trial, 8 + trial / 6));
        const Triangulation t = delaunay(s, trial % 2 ? CocircularRule::AvoidLowestIndex : CocircularRule::JoinLowestIndex);
        const DepthLabels d = delaunay_depths(t);
        const LevelSet ls = depth_contours(t, d);
        for (const Point& p : samples(rng, s, 200)) {
            const Classification c = classify(ls, p);
            const int q = level_by_disk_grouping(t, d, p);
            if (c.ambiguous())
                EXPECT_TRUE(q == c.level || q == *c.alternative) << trial;
            else
                EXPECT_EQ(c.level, q) << "trial " << trial << " at " << p.x << "," << p.y;
        }
    }
}

TEST(DepthContours, ContoursAreNested) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const PointSet s(test::uniform_points(rng, 400));
        const LevelSet ls = depth_contours(s);
        for (std::size_t k = 1; k < ls.contours.size(); ++k) {
            for (const ArcCurve& curve : ls.contours[k].curves) {
                for (const Arc& a : curve) {
                    const Point m = a.interpolate(0.5);
                    EXPECT_GE(classify(ls, m).level, ls.contours[k].level);
                }
            }
        }
    }
}

TEST(DepthContours, ArcsComeFromBoundaryCircles) {
    std::mt19937_64 rng(3);
    const PointSet s(test::uniform_points(rng, 300));
    const Triangulation t = delaunay(s);
    const DepthLabels d = delaunay_depths(t);
    const LevelSet ls = depth_contours(t, d);
    ASSERT_GE(ls.contours.size(), 3u);
    for (std::size_t k = 1; k < ls.contours.size(); ++k) {
        const int j = ls.contours[k].level;
        const auto circles = boundary_circles(t, d, j);
        for (const ArcCurve& curve : ls.contours[k].curves) {
            EXPECT_GT(std::abs(signed_area(curve)), 0.0);
            for (std::size_t i = 0; i < curve.size(); ++i) {
                const Arc& a = curve[i];
                ASSERT_TRUE(a.circle.defining_triple.has_value());
                std::array<int, 3> ds{};
                for (int v = 0; v < 3; ++v) ds[v] = d.depth[(*a.circle.defining_triple)[v]];
                std::sort(ds.begin(), ds.end());
                EXPECT_EQ(ds, (std::array<int, 3>{j - 1, j, j}));
                const Arc& b = curve[(i + 1) % curve.size()];
                EXPECT_LT(distance(a.end(), b.start()), 1e-7);
            }
        }
    }
}
