#include "hcover/transversal.hpp"

#include <algorithm>
#include <numeric>

#include "hcover/angular.hpp"
#include "hcover/combinatorics.hpp"

namespace hcover {

AffineFlat make_flat(Point base, std::vector<Point> directions) {
  const std::size_t d = base.dim();
  if (directions.size() >= d) throw DomainError("flat dimension must be below the ambient dimension");
  linalg::Matrix rows;
  for (const auto& v : directions) {
    require_same_dim(base, v);
    rows.push_back(v.coords());
  }
  if (!rows.empty() && linalg::rank(rows) != rows.size()) {
    throw DomainError("flat directions are linearly dependent");
  }
  return AffineFlat{std::move(base), std::move(directions)};
}

namespace {

// Orthogonalizes v against an orthogonal list, in place.
void reduce(Point& v, const std::vector<Point>& basis) {
  for (const auto& b : basis) v -= (dot(v, b) / squared_norm(b)) * b;
}

Point unit_vector(std::size_t d, std::size_t i) {
  std::vector<Scalar> c(d);
  c[i] = 1;
  return Point(std::move(c));
}

Point coordinates(const Point& x, const std::vector<Point>& basis) {
  std::vector<Scalar> c;
  c.reserve(basis.size());
  for (const auto& b : basis) c.push_back(dot(x, b));
  return Point(std::move(c));
}

}  // namespace

std::vector<Point> complement_basis(const AffineFlat& flat) {
  const std::size_t d = flat.dim();
  std::vector<Point> span;
  for (auto v : flat.directions) {
    reduce(v, span);
    if (v.is_zero()) throw DomainError("flat directions are linearly dependent");
    span.push_back(std::move(v));
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < d && span.size() < d; ++i) {
    Point e = unit_vector(d, i);
    reduce(e, span);
    if (e.is_zero()) continue;
    span.push_back(e);
    out.push_back(std::move(e));
  }
  if (out.size() + flat.flat_dim() != d) throw InternalError("complement basis has the wrong size");
  return out;
}

PointSet project_to_complement(const PointSet& set, const AffineFlat& flat) {
  const auto basis = complement_basis(flat);
  PointSet out;
  out.colors = set.colors;
  out.provenance = set.provenance;
  for (const auto& p : set.points) {
    require_same_dim(p, flat.base);
    out.points.push_back(coordinates(p, basis));
  }
  return out;
}

Point projected_flat_point(const AffineFlat& flat) { return coordinates(flat.base, complement_basis(flat)); }

bool tuple_touches_flat(std::span<const Point> tuple, const AffineFlat& flat) {
  const std::size_t k = flat.dim() - flat.flat_dim();
  if (tuple.size() != k + 1) throw DomainError("tuple must have d - m + 1 points");
  const auto basis = complement_basis(flat);
  std::vector<Point> projected;
  for (const auto& p : tuple) {
    require_same_dim(p, flat.base);
    projected.push_back(coordinates(p, basis));
  }
  return closed_contains(point_in_simplex(coordinates(flat.base, basis), projected));
}

bool TransversalReport::all_meet_bound() const {
  return std::all_of(sets.begin(), sets.end(), [](const auto& s) { return s.meets_bound; });
}

bool TransversalReport::all_meet_slack_bound() const {
  return std::all_of(sets.begin(), sets.end(), [](const auto& s) { return s.meets_slack_bound; });
}

TransversalReport verify_transversal(const AffineFlat& flat, const std::vector<PointSet>& sets) {
  const std::size_t d = flat.dim(), m = flat.flat_dim();
  if (sets.size() != m + 1) throw DomainError("need m + 1 point sets");
  const std::size_t k = d - m;
  TransversalReport report;
  report.d = d;
  report.m = m;
  report.bound = selection_bound(static_cast<int>(k));
  const Point target = projected_flat_point(flat);
  for (const auto& set : sets) {
    const std::size_t n = set.size();
    if (n < k + 1) throw DomainError("each set needs at least d - m + 1 points");
    const PointSet projected = project_to_complement(set, flat);
    std::uint64_t count = 0;
    std::vector<Point> simplex(k + 1);
    for_each_combination(n, k + 1, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i <= k; ++i) simplex[i] = projected.points[idx[i]];
      count += closed_contains(point_in_simplex(target, simplex));
      return true;
    });
    TransversalSetReport s;
    s.count = count;
    s.total = binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k + 1));
    s.fraction = Scalar(Integer(std::to_string(s.count), 10), Integer(std::to_string(s.total), 10));
    s.fraction.canonicalize();
    s.meets_bound = s.fraction >= report.bound;
    report.slack_bounds.push_back(slackened(report.bound, n));
    s.meets_slack_bound = s.fraction >= report.slack_bounds.back();
    report.sets.push_back(std::move(s));
  }
  return report;
}

Scalar median_floor(std::size_t n) {
  if (n < 2) throw DomainError("median floor needs n >= 2");
  const auto a = static_cast<std::int64_t>((n - 1) / 2);
  const auto b = static_cast<std::int64_t>(n / 2);
  return make_scalar(a * b, binom(static_cast<std::int64_t>(n), 2));
}

namespace {

// p . u(t) with u(t) = ua + t (ub - ua), as value + slope * t.
struct Affine1 {
  Scalar value, slope;
  Scalar at(const Scalar& t) const { return value + slope * t; }
};

Affine1 along(const Point& p, const Point& ua, const Point& ub) { return {dot(p, ua), dot(p, ub - ua)}; }

// Lower and upper order statistics bounding the median over one stretch.
std::pair<Affine1, Affine1> median_bounds(const PointSet& set, const Point& ua, const Point& ub) {
  std::vector<Affine1> values;
  for (const auto& p : set.points) values.push_back(along(p, ua, ub));
  const Scalar half(1, 2);
  // The order is constant on the open stretch, so sort at its midpoint.
  std::sort(values.begin(), values.end(),
            [&](const Affine1& a, const Affine1& b) { return a.at(half) < b.at(half); });
  const std::size_t n = values.size();
  const std::size_t lo = (n - 1) / 2, hi = n / 2;
  return {values[lo], values[hi]};
}

// {t in [lo, hi] : g(t) >= 0}, narrowing [lo, hi]; false when empty.
bool restrict_nonnegative(const Affine1& g, Scalar& lo, Scalar& hi) {
  if (sgn(g.slope) == 0) return sgn(g.value) >= 0;
  const Scalar root = -g.value / g.slope;
  if (sgn(g.slope) > 0) {
    lo = std::max(lo, root);
  } else {
    hi = std::min(hi, root);
  }
  return lo <= hi;
}

Affine1 minus(const Affine1& a, const Affine1& b) { return {a.value - b.value, a.slope - b.slope}; }

// Normal directions on the closed upper half circle where some within-set
// order changes, plus the three axis directions, sorted by angle.
std::vector<Direction> critical_normals(const std::vector<const PointSet*>& sets) {
  std::vector<Direction> out{to_direction(Point{1, 0}), to_direction(Point{0, 1}), to_direction(Point{-1, 0})};
  for (const PointSet* s : sets) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      for (std::size_t j = i + 1; j < s->size(); ++j) {
        const Point diff = s->points[j] - s->points[i];
        Point normal{-diff[1], diff[0]};
        if (sgn(normal[1]) < 0 || (sgn(normal[1]) == 0 && sgn(normal[0]) < 0)) normal = Scalar(-1) * normal;
        out.push_back(to_direction(normal));
      }
    }
  }
  std::sort(out.begin(), out.end(), angle_less);
  out.erase(std::unique(out.begin(), out.end(), same_direction), out.end());
  return out;
}

}  // namespace

TransversalLine find_transversal_line_2d(const PointSet& p0, const PointSet& p1) {
  if (p0.size() < 2 || p1.size() < 2) throw DomainError("each set needs at least two points");
  if (p0.dim() != 2 || p1.dim() != 2) throw DimensionError("find_transversal_line_2d is planar");
  // Points shared between the sets are harmless; repeats inside one set
  // would leave a stretch with no strict order.
  for (const PointSet* s : {&p0, &p1}) {
    std::vector<Point> sorted = s->points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DegeneracyError("coincident points within one set");
    }
  }

  const auto normals = critical_normals({&p0, &p1});
  for (std::size_t k = 0; k + 1 < normals.size(); ++k) {
    const Point ua = to_point(normals[k]), ub = to_point(normals[k + 1]);
    const auto [lo0, hi0] = median_bounds(p0, ua, ub);
    const auto [lo1, hi1] = median_bounds(p1, ua, ub);
    Scalar tl = 0, th = 1;
    if (!restrict_nonnegative(minus(hi1, lo0), tl, th) || !restrict_nonnegative(minus(hi0, lo1), tl, th)) {
      continue;
    }
    const Scalar t = (tl + th) / 2;
    const Point normal = ua + t * (ub - ua);
    const Scalar c = (std::max(lo0.at(t), lo1.at(t)) + std::min(hi0.at(t), hi1.at(t))) / 2;

    auto flat = make_flat((c / squared_norm(normal)) * normal, {Point{-normal[1], normal[0]}});
    TransversalLine out{std::move(flat), Hyperplane(normal, c), {}, {}};
    out.report = verify_transversal(out.flat, {p0, p1});
    for (const auto* s : {&p0, &p1}) out.floors.push_back(median_floor(s->size()));
    for (std::size_t i = 0; i < 2; ++i) {
      if (out.report.sets[i].fraction < out.floors[i]) {
        throw InternalError("transversal line misses the median floor");
      }
    }
    return out;
  }
  throw InternalError("no direction puts the two median intervals in contact");
}

}  // namespace hcover
