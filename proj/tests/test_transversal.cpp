#include <gtest/gtest.h>

#include "hcover/transversal.hpp"
#include "support.hpp"

namespace hcover {
namespace {

using testing::pt;
using testing::RationalGen;

AffineFlat x_axis() { return make_flat(pt(0, 0), {pt(1, 0)}); }

PointSet set_of(std::vector<Point> p) { return make_point_set(std::move(p), "test"); }

Point p3(std::int64_t x, std::int64_t y, std::int64_t z) { return Point{Scalar(x), Scalar(y), Scalar(z)}; }

TEST(Flat, Validation) {
  EXPECT_THROW(make_flat(pt(0, 0), {pt(1, 0), pt(0, 1)}), DomainError);
  EXPECT_THROW(make_flat(p3(0, 0, 0), {p3(1, 2, 3), p3(2, 4, 6)}), DomainError);
  EXPECT_NO_THROW(make_flat(p3(0, 0, 0), {p3(1, 2, 3), p3(2, 4, 7)}));
  EXPECT_NO_THROW(make_flat(pt(3, 4), {}));
}

TEST(Projection, Examples) {
  auto proj = project_to_complement(set_of({pt(3, 5)}), x_axis());
  ASSERT_EQ(proj.points[0].dim(), 1u);
  EXPECT_EQ(proj.points[0][0], 5);
  auto flat = make_flat(pt(1, 2), {pt(1, 1)});
  auto on = project_to_complement(set_of({pt(4, 5), pt(-2, -1)}), flat);
  EXPECT_EQ(on.points[0], projected_flat_point(flat));
  EXPECT_EQ(on.points[1], projected_flat_point(flat));
}

TEST(Projection, ComplementGramMatrixMatchesDirectComputation) {
  RationalGen gen(33);
  auto flat = make_flat(gen.point(3, 5), {gen.point(3, 5)});
  auto basis = complement_basis(flat);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(dot(basis[0], basis[1]), 0);
  for (const auto& b : basis) EXPECT_EQ(dot(b, flat.directions[0]), 0);
  auto pts = gen.points(6, 3, 10);
  auto proj = project_to_complement(set_of(pts), flat);
  const Point& v = flat.directions[0];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      // Squared distance within the complement, computed two ways.
      Point diff = pts[i] - pts[j];
      Point perp = diff - (dot(diff, v) / squared_norm(v)) * v;
      Point c = proj.points[i] - proj.points[j];
      Scalar via_basis = 0;
      for (std::size_t k = 0; k < 2; ++k) via_basis += c[k] * c[k] / squared_norm(basis[k]);
      EXPECT_EQ(via_basis, squared_norm(perp));
    }
  }
}

TEST(TupleTouches, Examples) {
  std::vector<Point> crossing{pt(0, 1), pt(0, -1)}, above{pt(0, 1), pt(1, 2)}, on{pt(5, 0), pt(1, 2)};
  EXPECT_TRUE(tuple_touches_flat(crossing, x_axis()));
  EXPECT_FALSE(tuple_touches_flat(above, x_axis()));
  EXPECT_TRUE(tuple_touches_flat(on, x_axis()));
  std::vector<Point> three{pt(0, 1), pt(0, -1), pt(1, 1)};
  EXPECT_THROW(tuple_touches_flat(three, x_axis()), DomainError);
}

TEST(TupleTouches, PlanarMatchesOppositeClosedSides) {
  RationalGen gen(5);
  for (int trial = 0; trial < 2000; ++trial) {
    Point a = gen.point(2, 5), b = gen.point(2, 5), base = gen.point(2, 5), dir = gen.point(2, 3);
    if (dir.is_zero()) continue;
    auto flat = make_flat(base, {dir});
    Hyperplane line = line_through(base, base + dir);
    std::vector<Point> pair{a, b}, swapped{b, a};
    const bool expected = line.side(a) * line.side(b) <= 0;
    EXPECT_EQ(tuple_touches_flat(pair, flat), expected);
    EXPECT_EQ(tuple_touches_flat(swapped, flat), expected);
  }
}

TEST(VerifyTransversal, Examples) {
  auto r = verify_transversal(x_axis(), {set_of({pt(0, 1), pt(0, -1)}), set_of({pt(1, 1), pt(1, -1)})});
  EXPECT_EQ(r.bound, make_scalar(1, 2));
  ASSERT_EQ(r.sets.size(), 2u);
  EXPECT_EQ(r.sets[0].fraction, 1);
  EXPECT_EQ(r.sets[1].fraction, 1);
  EXPECT_TRUE(r.all_meet_bound());
  auto above = verify_transversal(x_axis(), {set_of({pt(0, 1), pt(3, 2)}), set_of({pt(1, 1), pt(1, 7)})});
  EXPECT_EQ(above.sets[0].count, 0u);
  EXPECT_EQ(above.sets[1].count, 0u);
  EXPECT_FALSE(above.all_meet_bound());
  EXPECT_THROW(verify_transversal(x_axis(), {set_of({pt(0, 1), pt(0, -1)})}), DomainError);
}

// Line through base along v against triangle abc, by Cramer's rule on
// base + s v = a + l2 (b - a) + l3 (c - a). Returns -1 when parallel.
int line_hits_triangle(const Point& base, const Point& v, const Point& a, const Point& b, const Point& c) {
  const Point e1 = b - a, e2 = c - a, rhs = base - a;
  auto det3 = [](const Point& x, const Point& y, const Point& z) -> Scalar {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - y[0] * (x[1] * z[2] - x[2] * z[1]) +
           z[0] * (x[1] * y[2] - x[2] * y[1]);
  };
  const Point nv = Scalar(-1) * v;
  const Scalar det = det3(nv, e1, e2);
  if (sgn(det) == 0) return -1;
  const Scalar l2 = det3(nv, rhs, e2) / det, l3 = det3(nv, e1, rhs) / det;
  return sgn(l2) >= 0 && sgn(l3) >= 0 && l2 + l3 <= 1;
}

TEST(VerifyTransversal, SpaceLineMatchesTriangleEnumeration) {
  RationalGen gen(3);
  for (int instance = 0; instance < 10; ++instance) {
    std::vector<PointSet> sets{set_of(gen.points(6, 3, 4)), set_of(gen.points(6, 3, 4))};
    // Line through the two set centroids, so a fair share of triangles is hit.
    Point c0 = sets[0].points[0], c1 = sets[1].points[0];
    for (std::size_t i = 1; i < 6; ++i) {
      c0 += sets[0].points[i];
      c1 += sets[1].points[i];
    }
    c0 = make_scalar(1, 6) * c0;
    c1 = make_scalar(1, 6) * c1;
    auto flat = make_flat(c0, {c1 - c0});
    auto r = verify_transversal(flat, sets);
    EXPECT_EQ(r.bound, make_scalar(2, 9));
    for (std::size_t s = 0; s < 2; ++s) {
      std::uint64_t expected = 0;
      const auto& p = sets[s].points;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
          for (std::size_t k = j + 1; k < 6; ++k) {
            int hit = line_hits_triangle(c0, c1 - c0, p[i], p[j], p[k]);
            ASSERT_GE(hit, 0) << "seeded instance has a line parallel to a triangle";
            expected += hit;
          }
      EXPECT_EQ(r.sets[s].count, expected);
      EXPECT_EQ(r.sets[s].total, 20u);
    }
  }
}

// Rational rotations from Pythagorean triples.
Point rotate2(const Point& p, const Scalar& c, const Scalar& s) {
  return Point{c * p[0] - s * p[1], s * p[0] + c * p[1]};
}

Point rotate3(const Point& p) {
  // About z by (3/5, 4/5), then about x by (5/13, 12/13).
  const Scalar c1(3, 5), s1(4, 5), c2(5, 13), s2(12, 13);
  Point r{c1 * p[0] - s1 * p[1], s1 * p[0] + c1 * p[1], p[2]};
  return Point{r[0], c2 * r[1] - s2 * r[2], s2 * r[1] + c2 * r[2]};
}

TEST(VerifyTransversal, InvariantUnderRigidMotions) {
  RationalGen gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PointSet> sets{set_of(gen.points(7, 2, 5)), set_of(gen.points(8, 2, 5))};
    auto flat = make_flat(gen.point(2, 2), {gen.point(2, 3)});
    if (flat.directions[0].is_zero()) continue;
    const Scalar c(8, 17), s(15, 17);
    const Point shift = pt(3, -7);
    auto move = [&](const Point& p) { return rotate2(p, c, s) + shift; };
    std::vector<PointSet> moved;
    for (const auto& set : sets) {
      PointSet m;
      for (const auto& p : set.points) m.points.push_back(move(p));
      moved.push_back(m);
    }
    auto moved_flat = make_flat(move(flat.base), {rotate2(flat.directions[0], c, s)});
    auto a = verify_transversal(flat, sets), b = verify_transversal(moved_flat, moved);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a.sets[i].fraction, b.sets[i].fraction);
  }
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<PointSet> sets{set_of(gen.points(5, 3, 4)), set_of(gen.points(5, 3, 4))};
    auto flat = make_flat(gen.point(3, 1), {gen.point(3, 3)});
    std::vector<PointSet> moved;
    for (const auto& set : sets) {
      PointSet m;
      for (const auto& p : set.points) m.points.push_back(rotate3(p));
      moved.push_back(m);
    }
    auto moved_flat = make_flat(rotate3(flat.base), {rotate3(flat.directions[0])});
    auto a = verify_transversal(flat, sets), b = verify_transversal(moved_flat, moved);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a.sets[i].count, b.sets[i].count);
  }
}

TEST(MedianFloor, Values) {
  EXPECT_EQ(median_floor(2), 0);
  EXPECT_EQ(median_floor(8), make_scalar(12, 28));
  EXPECT_EQ(median_floor(9), make_scalar(16, 36));
  EXPECT_EQ(median_floor(12), make_scalar(30, 66));
}

TEST(FindTransversal, TwoSegments) {
  auto out = find_transversal_line_2d(set_of({pt(0, 0), pt(0, 4)}), set_of({pt(2, 1), pt(2, 5)}));
  EXPECT_EQ(out.report.sets[0].fraction, 1);
  EXPECT_EQ(out.report.sets[1].fraction, 1);
  EXPECT_EQ(out.line.side(pt(0, 0)) * out.line.side(pt(0, 4)), -1);
}

TEST(FindTransversal, IdenticalSets) {
  RationalGen gen(2);
  auto pts = gen.points(9, 2, 10);
  auto out = find_transversal_line_2d(set_of(pts), set_of(pts));
  EXPECT_EQ(out.report.sets[0].fraction, out.report.sets[1].fraction);
  EXPECT_GE(out.report.sets[0].fraction, median_floor(9));
}

std::uint64_t split_count(const std::vector<Point>& pts, const Hyperplane& line) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) c += line.side(pts[i]) * line.side(pts[j]) <= 0;
  return c;
}

TEST(FindTransversal, SeededEightPointSets) {
  RationalGen gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = gen.points(8, 2, 20), b = gen.points(8, 2, 20);
    auto out = find_transversal_line_2d(set_of(a), set_of(b));
    EXPECT_GE(out.report.sets[0].fraction, make_scalar(12, 28));
    EXPECT_GE(out.report.sets[1].fraction, make_scalar(12, 28));
    EXPECT_EQ(out.report.sets[0].count, split_count(a, out.line));
    EXPECT_EQ(out.report.sets[1].count, split_count(b, out.line));
    // Lines through two of the 16 points realize every split; the floor is
    // attainable by one of them.
    std::vector<Point> all = a;
    all.insert(all.end(), b.begin(), b.end());
    bool attainable = false;
    for (std::size_t i = 0; i < all.size() && !attainable; ++i)
      for (std::size_t j = i + 1; j < all.size() && !attainable; ++j) {
        auto line = line_through(all[i], all[j]);
        attainable = split_count(a, line) >= 12 && split_count(b, line) >= 12;
      }
    EXPECT_TRUE(attainable);
  }
}

TEST(FindTransversal, MedianOfProjectionIsOneDimensionalMaxDepth) {
  RationalGen gen(4);
  for (std::size_t n : {5, 6, 9, 12}) {
    auto pts = gen.points(n, 2, 10);
    auto flat = make_flat(pt(0, 0), {gen.point(2, 3)});
    if (flat.directions[0].is_zero()) continue;
    auto proj = project_to_complement(set_of(pts), flat);
    auto sorted = proj.points;
    std::sort(sorted.begin(), sorted.end());
    auto r = depth_naive(sorted[(n - 1) / 2], proj);
    EXPECT_EQ(r.bound, make_scalar(1, 2));
    EXPECT_GE(r.count, static_cast<std::uint64_t>((n / 2) * ((n + 1) / 2)));
  }
}

TEST(FindTransversal, Preconditions) {
  EXPECT_THROW(find_transversal_line_2d(set_of({pt(0, 0)}), set_of({pt(1, 1), pt(2, 2)})), DomainError);
  EXPECT_THROW(find_transversal_line_2d(set_of({pt(0, 0), pt(0, 0)}), set_of({pt(1, 0), pt(2, 2)})),
               DegeneracyError);
  EXPECT_NO_THROW(find_transversal_line_2d(set_of({pt(0, 0), pt(1, 0)}), set_of({pt(1, 0), pt(2, 2)})));
}

}  // namespace
}  // namespace hcover
