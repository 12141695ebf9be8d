#include "hcover/selection.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hcover/angular.hpp"
#include "hcover/parallel.hpp"

namespace hcover {

std::size_t PointSet::dim() const {
  if (points.empty()) throw DomainError("empty point set has no dimension");
  const std::size_t d = points[0].dim();
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionError("mixed dimensions in point set");
  }
  return d;
}

PointSet make_point_set(std::vector<Point> points, std::string provenance) {
  PointSet s;
  s.points = std::move(points);
  s.provenance = std::move(provenance);
  return s;
}

Scalar selection_bound(int d, BoundVariant variant) {
  if (d < 1) throw DomainError("selection_bound needs d >= 1");
  if (variant == BoundVariant::Barany) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(d + 1), static_cast<unsigned long>(d));
    return Scalar(Integer(1), den);
  }
  Integer factorial = 1;
  for (int i = 2; i <= d + 1; ++i) factorial *= i;
  Scalar r(Integer(2 * d), factorial * (d + 1));
  r.canonicalize();
  return r;
}

Scalar slackened(const Scalar& bound, std::size_t n) {
  if (n == 0) throw DomainError("slack needs n > 0");
  return bound - make_scalar(kSlackConstant, static_cast<std::int64_t>(n));
}

DepthReport make_report(std::uint64_t count, std::uint64_t total, const Scalar& bound,
                        std::size_t n) {
  if (total == 0) throw DomainError("depth report over zero tuples");
  if (count > total) throw InternalError("depth count exceeds tuple total");
  DepthReport r;
  r.count = count;
  r.total = total;
  r.fraction = Scalar(Integer(std::to_string(count), 10), Integer(std::to_string(total), 10));
  r.fraction.canonicalize();
  r.bound = bound;
  r.meets_bound = r.fraction >= bound;
  r.slack_bound = slackened(bound, n);
  r.meets_slack_bound = r.fraction >= r.slack_bound;
  return r;
}

DepthReport depth_naive(const Point& q, const PointSet& set, std::size_t max_witnesses) {
  const std::size_t d = set.dim();
  if (q.dim() != d) throw DimensionError("query dimension differs from point set dimension");
  const std::size_t n = set.size();
  if (n < d + 1) throw DomainError("depth needs at least d+1 points");
  std::uint64_t count = 0;
  std::uint64_t boundary = 0;
  std::vector<std::vector<std::size_t>> witnesses;
  std::vector<Point> simplex(d + 1);
  for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t k = 0; k <= d; ++k) simplex[k] = set.points[idx[k]];
    const Containment c = point_in_simplex(q, simplex);
    if (closed_contains(c)) {
      ++count;
      if (c == Containment::Boundary) ++boundary;
      if (witnesses.size() < max_witnesses) witnesses.push_back(idx);
    }
    return true;
  });
  auto r = make_report(count, binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d + 1)),
                       selection_bound(static_cast<int>(d)), n);
  r.boundary_count = boundary;
  r.witnesses = std::move(witnesses);
  return r;
}

namespace {

std::uint64_t choose2(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }
std::uint64_t choose3(std::uint64_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

}  // namespace

std::uint64_t planar_depth_count(const Point& q, std::span<const Point> points) {
  if (q.dim() != 2) throw DimensionError("planar depth needs a planar query");
  const std::uint64_t n = points.size();
  std::vector<Direction> dirs;
  dirs.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != 2) throw DimensionError("planar depth needs planar points");
    if (p == q) continue;
    dirs.push_back(to_direction(p - q));
  }
  const std::uint64_t m = dirs.size();
  // Every triangle with a vertex at q contains q.
  const std::uint64_t through_q = choose3(n) - choose3(m);
  if (m < 3) return through_q;

  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::vector<const Direction*> group_dir;
  std::vector<std::uint64_t> group_size;
  for (const auto& d : dirs) {
    if (!group_dir.empty() && same_direction(*group_dir.back(), d)) {
      ++group_size.back();
    } else {
      group_dir.push_back(&d);
      group_size.push_back(1);
    }
  }
  const std::size_t groups = group_dir.size();
  std::vector<std::uint64_t> prefix(2 * groups + 1, 0);
  for (std::size_t i = 0; i < 2 * groups; ++i) prefix[i + 1] = prefix[i] + group_size[i % groups];

  // A triple misses the closed triangle's q iff its directions fit in an open
  // half-turn; charge it to the first direction group of that half-turn.
  std::uint64_t missing = 0;
  std::size_t j = 1;
  for (std::size_t g = 0; g < groups; ++g) {
    j = std::max(j, g + 1);
    while (j < g + groups && cross_sign(*group_dir[g], *group_dir[j % groups]) > 0) ++j;
    const std::uint64_t ahead = prefix[j] - prefix[g + 1];
    const std::uint64_t c = group_size[g];
    missing += choose3(c) + choose2(c) * ahead + c * choose2(ahead);
  }
  return through_q + (choose3(m) - missing);
}

DepthReport depth_planar_sweep(const Point& q, const PointSet& set) {
  if (set.dim() != 2 || q.dim() != 2) throw DimensionError("depth_planar_sweep is planar");
  if (set.size() < 3) throw DomainError("depth needs at least 3 points");
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.points[i] == q) {
      throw DegeneracyError("query coincides with data point " + std::to_string(i), {{i}});
    }
  }
  const std::uint64_t count = planar_depth_count(q, set.points);
  return make_report(count, binom(static_cast<std::int64_t>(set.size()), 3), selection_bound(2),
                     set.size());
}

DepthReport colorful_depth(const Point& q, const PointSet& set, std::size_t max_witnesses) {
  const std::size_t d = set.dim();
  if (q.dim() != d) throw DimensionError("query dimension differs from point set dimension");
  if (!set.colors || set.colors->size() != set.size()) {
    throw DomainError("colorful depth needs one color per point");
  }
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < set.size(); ++i) classes[(*set.colors)[i]].push_back(i);
  if (classes.size() != d + 1) {
    throw DomainError("colorful depth needs exactly " + std::to_string(d + 1) +
                      " color classes, got " + std::to_string(classes.size()));
  }
  std::vector<const std::vector<std::size_t>*> members;
  std::uint64_t total = 1;
  for (const auto& [color, idx] : classes) {
    members.push_back(&idx);
    total *= idx.size();
  }

  std::uint64_t count = 0;
  std::uint64_t boundary = 0;
  std::vector<std::vector<std::size_t>> witnesses;
  std::vector<std::size_t> pick(d + 1, 0);
  std::vector<Point> simplex(d + 1);
  while (true) {
    std::vector<std::size_t> tuple(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
      tuple[k] = (*members[k])[pick[k]];
      simplex[k] = set.points[tuple[k]];
    }
    const Containment c = point_in_simplex(q, simplex);
    if (closed_contains(c)) {
      ++count;
      if (c == Containment::Boundary) ++boundary;
      if (witnesses.size() < max_witnesses) witnesses.push_back(tuple);
    }
    std::size_t k = 0;
    while (k <= d && ++pick[k] == members[k]->size()) pick[k++] = 0;
    if (k > d) break;
  }
  auto r = make_report(count, total, selection_bound(static_cast<int>(d)), set.size());
  r.boundary_count = boundary;
  r.witnesses = std::move(witnesses);
  return r;
}

CandidateSet candidate_vertices(const PointSet& set) {
  if (set.dim() != 2) throw DimensionError("candidate_vertices is planar");
  if (set.size() < 2) throw DomainError("candidate_vertices needs at least 2 points");
  struct PairLine {
    std::size_t a, b;
    Hyperplane line;
  };
  std::vector<PairLine> lines;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set.points[i] == set.points[j]) continue;
      lines.push_back({i, j, line_through(set.points[i], set.points[j])});
    }
  }
  std::vector<std::pair<Point, CandidateSource>> raw;
  for (const auto& p : set.points) raw.emplace_back(p, CandidateSource::DataPoint);
  for (std::size_t s = 0; s < lines.size(); ++s) {
    for (std::size_t t = s + 1; t < lines.size(); ++t) {
      const auto& u = lines[s];
      const auto& v = lines[t];
      if (u.a == v.a || u.a == v.b || u.b == v.a || u.b == v.b) continue;
      if (auto x = intersect(u.line, v.line)) raw.emplace_back(std::move(*x), CandidateSource::PairIntersection);
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
    if (auto c = x.first <=> y.first; c != 0) return c < 0;
    return x.second < y.second;
  });
  CandidateSet out;
  for (auto& [p, src] : raw) {
    if (!out.points.empty() && out.points.back() == p) continue;
    out.points.push_back(std::move(p));
    out.sources.push_back(src);
  }
  return out;
}

MaxDepthResult max_depth_point(const PointSet& set, unsigned threads) {
  if (set.dim() != 2) throw DimensionError("max_depth_point is planar");
  if (set.size() < 3) throw DomainError("max_depth_point needs at least 3 points");
  if (auto v = general_position_report(set.points); !v.empty()) {
    throw DegeneracyError("point set is not in general position", violation_indices(v));
  }
  const CandidateSet candidates = candidate_vertices(set);
  const auto counts = parallel_map(candidates.points.size(), threads, [&](std::size_t i) {
    return planar_depth_count(candidates.points[i], set.points);
  });
  // Candidates are in lexicographic order, so the first maximum is the
  // tie-break winner regardless of how the counts were scheduled.
  const std::size_t best = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
  MaxDepthResult out{candidates.points[best], depth_naive(candidates.points[best], set)};
  if (out.report.count != counts[best]) {
    throw InternalError("sweep depth " + std::to_string(counts[best]) +
                        " disagrees with enumeration " + std::to_string(out.report.count));
  }
  return out;
}

}  // namespace hcover
