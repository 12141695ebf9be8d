#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hcover/angular.hpp"
#include "hcover/geometry.hpp"
#include "support.hpp"

namespace hcover {
namespace {

using testing::pt;
using testing::RationalGen;

TEST(Scalar, ParsesRationalDecimalAndInteger) {
  EXPECT_EQ(parse_scalar("1/2"), make_scalar(1, 2));
  EXPECT_EQ(parse_scalar("-6/4"), make_scalar(-3, 2));
  EXPECT_EQ(parse_scalar("0.25"), make_scalar(1, 4));
  EXPECT_EQ(parse_scalar("-12"), Scalar(-12));
  EXPECT_EQ(to_string(parse_scalar("10/4")), "5/2");
  EXPECT_THROW(parse_scalar("1e3"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("inf"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
}

TEST(Orientation, PlanarExamples) {
  std::vector<Point> ccw{pt(0, 0), pt(1, 0), pt(0, 1)};
  std::vector<Point> collinear{pt(0, 0), pt(1, 1), pt(2, 2)};
  std::vector<Point> cw{pt(0, 0), pt(0, 1), pt(1, 0)};
  EXPECT_EQ(orientation(ccw), 1);
  EXPECT_EQ(orientation(collinear), 0);
  EXPECT_EQ(orientation(cw), -1);
}

TEST(Orientation, DimensionMismatchThrows) {
  std::vector<Point> bad{pt(0, 0), pt(1, 0), Point{1, 2, 3}};
  EXPECT_THROW(orientation(bad), DimensionError);
  std::vector<Point> too_few{pt(0, 0), pt(1, 0)};
  EXPECT_THROW(orientation(too_few), DimensionError);
}

TEST(Orientation, AntisymmetricUnderTranspositions) {
  RationalGen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto pts = gen.points(d + 1, d, 5);
    const int base = orientation(pts);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) {
        auto swapped = pts;
        std::swap(swapped[i], swapped[j]);
        EXPECT_EQ(orientation(swapped), -base);
      }
    }
  }
}

TEST(Orientation, ThreeDimensionalSign) {
  std::vector<Point> tet{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}};
  EXPECT_EQ(orientation(tet), -1);  // det [[0,0,0,1],[1,0,0,1],[0,1,0,1],[0,0,1,1]] = -1
  tet[3] = Point{1, 1, 0};
  EXPECT_EQ(orientation(tet), 0);
}

TEST(PointInSimplex, Examples) {
  std::vector<Point> s{pt(0, 0), pt(4, 0), pt(0, 4)};
  EXPECT_EQ(point_in_simplex(pt(1, 1), s), Containment::Interior);
  EXPECT_EQ(point_in_simplex(pt(2, 2), s), Containment::Boundary);
  EXPECT_EQ(point_in_simplex(pt(5, 5), s), Containment::Outside);
  EXPECT_EQ(point_in_simplex(pt(0, 0), s), Containment::Boundary);
  EXPECT_THROW(point_in_simplex(Point{1, 1, 1}, s), DimensionError);
}

TEST(PointInSimplex, DegenerateSimplexIsNeverInterior) {
  std::vector<Point> flat{pt(0, 0), pt(2, 2), pt(4, 4)};
  EXPECT_EQ(point_in_simplex(pt(1, 1), flat), Containment::Boundary);
  EXPECT_EQ(point_in_simplex(pt(4, 4), flat), Containment::Boundary);
  EXPECT_EQ(point_in_simplex(pt(5, 5), flat), Containment::Outside);
  EXPECT_EQ(point_in_simplex(pt(1, 0), flat), Containment::Outside);
  std::vector<Point> pinch{pt(1, 1), pt(1, 1), pt(1, 1)};
  EXPECT_EQ(point_in_simplex(pt(1, 1), pinch), Containment::Boundary);
  EXPECT_EQ(point_in_simplex(pt(1, 2), pinch), Containment::Outside);
  // A flat tetrahedron in R^3: triangle in the z = 0 plane plus an inner point.
  std::vector<Point> tet{Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 4, 0}, Point{1, 1, 0}};
  EXPECT_EQ(point_in_simplex(Point{2, 1, 0}, tet), Containment::Boundary);
  EXPECT_EQ(point_in_simplex(Point{2, 1, 1}, tet), Containment::Outside);
}

TEST(PointInSimplex, PermutationInvariant) {
  RationalGen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto s = gen.points(d + 1, d, 4);
    auto q = gen.point(d, 4);
    const auto base = point_in_simplex(q, s);
    std::vector<std::size_t> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Point> t;
      for (auto i : perm) t.push_back(s[i]);
      EXPECT_EQ(point_in_simplex(q, t), base);
    }
  }
}

// Sign-of-orientation oracle: q is in the closed simplex iff, for every facet,
// q is on the opposite vertex's closed side of it.
bool facet_oracle(const Point& q, const std::vector<Point>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Point> with_vertex = s;
    std::vector<Point> with_query = s;
    with_query[i] = q;
    const int ov = orientation(with_vertex);
    const int oq = orientation(with_query);
    if (oq != 0 && oq != ov) return false;
  }
  return true;
}

TEST(PointInSimplex, AgreesWithFacetOracleOnRandomInstances) {
  RationalGen gen(2024);
  int mismatches = 0;
  int inside = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    auto s = gen.points(3, 2, 6);
    if (orientation(s) == 0) continue;
    auto q = gen.point(2, 6);
    const bool got = closed_contains(point_in_simplex(q, s));
    inside += got;
    if (got != facet_oracle(q, s)) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0);
  EXPECT_GT(inside, 100);
}

TEST(Projection, Examples) {
  EXPECT_EQ(project_onto_hyperplane(pt(1, 1), make_line(1, 1, 4)), pt(2, 2));
  EXPECT_EQ(project_onto_hyperplane(pt(1, 1), make_line(0, 1, 0)), pt(1, 0));
  EXPECT_EQ(project_onto_hyperplane(pt(3, 1), make_line(1, 1, 4)), pt(3, 1));
}

TEST(Projection, LandsOnHyperplaneAlongNormal) {
  RationalGen gen(9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 2 + trial % 3;
    Point normal = gen.point(d, 5);
    if (normal.is_zero()) continue;
    Hyperplane h(normal, gen.scalar());
    Point q = gen.point(d);
    Point out = project_onto_hyperplane(q, h);
    EXPECT_EQ(h.evaluate(out), 0);
    // q - out is parallel to the normal: orthogonal to every v with v . n = 0.
    Point v = gen.point(d, 5);
    v -= (dot(v, h.normal()) / squared_norm(h.normal())) * h.normal();
    ASSERT_EQ(dot(v, h.normal()), 0);
    EXPECT_EQ(dot(q - out, v), 0);
  }
}

TEST(Hyperplane, CanonicalForm) {
  Hyperplane a = make_line(make_scalar(3, 5), make_scalar(4, 5), 1);
  Hyperplane b = make_line(-3, -4, -5);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.normal()[0], 1);
  EXPECT_EQ(make_line(0, -2, 4).normal()[1], 1);
  EXPECT_EQ(make_line(0, -2, 4).offset(), -2);
  EXPECT_THROW(make_line(0, 0, 1), DomainError);
}

TEST(SegmentCrossesRay, Examples) {
  EXPECT_TRUE(segment_crosses_ray(pt(1, 0), pt(0, 1), pt(1, 1), pt(-1, -1)));
  EXPECT_FALSE(segment_crosses_ray(pt(1, 0), pt(0, 1), pt(1, 1), pt(1, 1)));
  EXPECT_TRUE(segment_crosses_ray(pt(1, 0), pt(0, 1), pt(1, 1), pt(0, -1)));
  EXPECT_THROW(segment_crosses_ray(pt(0, 0), pt(2, 2), pt(1, 1), pt(1, 0)), DegeneracyError);
  EXPECT_THROW(segment_crosses_ray(pt(1, 0), pt(0, 1), pt(1, 1), pt(0, 0)), DomainError);
}

TEST(SegmentCrossesRay, CollinearSegments) {
  EXPECT_TRUE(segment_crosses_ray(pt(2, 0), pt(3, 0), pt(0, 0), pt(1, 0)));
  EXPECT_FALSE(segment_crosses_ray(pt(-2, 0), pt(-3, 0), pt(0, 0), pt(1, 0)));
}

// Parametric solve of q + t*dir = a + s*(b - a) with t >= 0, s in [0, 1].
bool parametric_oracle(const Point& a, const Point& b, const Point& q, const Point& dir) {
  const Point e = b - a;
  const Point w = a - q;
  Scalar det = dir[0] * (-e[1]) - dir[1] * (-e[0]);
  if (sgn(det) == 0) return false;  // random instances are never parallel
  Scalar t = (w[0] * (-e[1]) - w[1] * (-e[0])) / det;
  Scalar s = (dir[0] * w[1] - dir[1] * w[0]) / det;
  return t >= 0 && s >= 0 && s <= 1;
}

TEST(SegmentCrossesRay, SymmetricAndMatchesParametricSolve) {
  RationalGen gen(77);
  int hits = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    Point a = gen.point(2, 5), b = gen.point(2, 5), q = gen.point(2, 5), dir = gen.point(2, 5);
    if (a == b || dir.is_zero()) continue;
    if (orient2d(a, b, q) == 0) continue;
    const bool ab = segment_crosses_ray(a, b, q, dir);
    EXPECT_EQ(ab, segment_crosses_ray(b, a, q, dir));
    Point e = b - a;
    if (sgn(dir[0] * e[1] - dir[1] * e[0]) != 0) EXPECT_EQ(ab, parametric_oracle(a, b, q, dir));
    hits += ab;
  }
  EXPECT_GT(hits, 100);
}

TEST(GeneralPosition, PointExamples) {
  std::vector<Point> ok{pt(0, 0), pt(1, 0), pt(0, 1)};
  EXPECT_TRUE(general_position_report(ok).empty());
  std::vector<Point> line{pt(0, 0), pt(1, 1), pt(2, 2)};
  auto v = general_position_report(line);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::AffinelyDependent);
  EXPECT_EQ(v[0].indices, (std::vector<std::size_t>{0, 1, 2}));
  std::vector<Point> dup{pt(0, 0), pt(0, 0)};
  v = general_position_report(dup);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Duplicate);
}

TEST(GeneralPosition, RandomRationalSetsAreGeneric) {
  RationalGen gen(42);
  auto pts = gen.points(12, 2, 1000);
  EXPECT_TRUE(general_position_report(pts).empty());
  // Exhaustive orientation oracle.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) EXPECT_NE(orient2d(pts[i], pts[j], pts[k]), 0);
}

TEST(GeneralPosition, LineExamples) {
  std::vector<Hyperplane> ok{make_line(0, 1, 0), make_line(1, 0, 0), make_line(1, 1, 4)};
  EXPECT_TRUE(lines_general_position_report(ok).empty());
  std::vector<Hyperplane> par{make_line(0, 1, 0), make_line(0, 1, 1)};
  auto v = lines_general_position_report(par);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Parallel);
  EXPECT_EQ(v[0].indices, (std::vector<std::size_t>{0, 1}));
  std::vector<Hyperplane> conc{make_line(0, 1, 0), make_line(1, 0, 0), make_line(1, -1, 0)};
  v = lines_general_position_report(conc);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Concurrent);
  std::vector<Hyperplane> same{make_line(1, 2, 3), make_line(2, 4, 6)};
  v = lines_general_position_report(same);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Coincident);
}

TEST(Linalg, SolveAndRank) {
  linalg::Matrix a{{1, 2}, {3, 4}, {5, 6}};
  EXPECT_EQ(linalg::rank(a), 2u);
  auto x = linalg::solve(a, {5, 11, 17});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 2);
  EXPECT_FALSE(linalg::solve(a, {5, 11, 18}));
  linalg::Matrix sing{{1, 2}, {2, 4}};
  EXPECT_FALSE(linalg::solve(sing, {1, 3}));
  EXPECT_EQ(linalg::determinant({{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(linalg::determinant({{0, 1}, {1, 0}}), -1);
}

TEST(Angular, DirectionsInArcStayInside) {
  const Point from = pt(1, 0);
  for (const Point& to : {pt(0, 1), pt(-1, 0), pt(0, -1), pt(1, 0), pt(1, -1)}) {
    auto samples = directions_in_arc(from, to, 3);
    ASSERT_EQ(samples.size(), 3u);
    for (const auto& s : samples) {
      auto f = to_direction(from), t = to_direction(to), d = to_direction(s);
      EXPECT_FALSE(same_direction(d, f));
      EXPECT_FALSE(same_direction(d, t));
      // Counterclockwise from `from`, d comes strictly before `to`.
      auto rel = [&](const Direction& x) {
        Direction r{x.x * f.x + x.y * f.y, x.y * f.x - x.x * f.y};
        return r;
      };
      if (!same_direction(f, t)) EXPECT_TRUE(angle_less(rel(d), rel(t)));
    }
  }
}

}  // namespace
}  // namespace hcover
