#include "hcover/dual.hpp"

#include <algorithm>
#include <numeric>

#include "hcover/parallel.hpp"

namespace hcover {

LineFamily make_line_family(std::vector<Hyperplane> lines, std::string provenance) {
  LineFamily f;
  f.lines = std::move(lines);
  f.provenance = std::move(provenance);
  return f;
}

namespace {

void require_planar(const LineFamily& family) {
  for (const auto& l : family.lines) {
    if (l.dim() != 2) throw DimensionError("line family must be planar");
  }
}

void require_planar(const Point& q) {
  if (q.dim() != 2) throw DimensionError("query point must be planar");
}

void require_general_position(const LineFamily& family) {
  if (auto v = lines_general_position_report(family.lines); !v.empty()) {
    throw DegeneracyError("line family is not in general position", violation_indices(v));
  }
}

bool on_any_line(const Point& q, const LineFamily& family) {
  return std::any_of(family.lines.begin(), family.lines.end(),
                     [&](const Hyperplane& l) { return l.side(q) == 0; });
}

}  // namespace

Containment surround_containment(const Point& q, const Hyperplane& a, const Hyperplane& b,
                                 const Hyperplane& c) {
  require_planar(q);
  auto ab = intersect(a, b);
  auto bc = intersect(b, c);
  auto ca = intersect(c, a);
  if (!ab || !bc || !ca) return Containment::Outside;
  const std::vector<Point> cell{*ab, *bc, *ca};
  return point_in_simplex(q, cell);
}

bool surround_direct(const Point& q, const Hyperplane& a, const Hyperplane& b, const Hyperplane& c) {
  return closed_contains(surround_containment(q, a, b, c));
}

bool surround_projection(const Point& q, const Hyperplane& a, const Hyperplane& b,
                         const Hyperplane& c) {
  require_planar(q);
  for (const Hyperplane* l : {&a, &b, &c}) {
    if (l->side(q) == 0) throw DegeneracyError("query lies on one of the lines");
  }
  if (parallel(a, b) || parallel(b, c) || parallel(c, a)) {
    throw DegeneracyError("parallel lines in surround_projection");
  }
  const std::vector<Point> feet{project_onto_hyperplane(q, a), project_onto_hyperplane(q, b),
                                project_onto_hyperplane(q, c)};
  return closed_contains(point_in_simplex(q, feet));
}

DepthReport dual_depth_naive(const Point& q, const LineFamily& family, std::size_t max_witnesses) {
  require_planar(q);
  require_planar(family);
  const std::size_t n = family.size();
  if (n < 3) throw DomainError("dual depth needs at least 3 lines");
  std::uint64_t count = 0;
  std::uint64_t boundary = 0;
  std::vector<std::vector<std::size_t>> witnesses;
  for_each_combination(n, 3, [&](const std::vector<std::size_t>& idx) {
    const Containment c =
        surround_containment(q, family.lines[idx[0]], family.lines[idx[1]], family.lines[idx[2]]);
    if (closed_contains(c)) {
      ++count;
      if (c == Containment::Boundary) ++boundary;
      if (witnesses.size() < max_witnesses) witnesses.push_back(idx);
    }
    return true;
  });
  auto r = make_report(count, binom(static_cast<std::int64_t>(n), 3), selection_bound(2), n);
  r.boundary_count = boundary;
  r.witnesses = std::move(witnesses);
  return r;
}

namespace {

// Dual depth via projections, or empty when the projection route does not
// apply (q on a line, or a parallel pair).
std::optional<std::uint64_t> projected_dual_count(const Point& q, const LineFamily& family) {
  std::vector<Point> feet;
  std::vector<Direction> dirs;
  feet.reserve(family.size());
  for (const auto& l : family.lines) {
    if (l.side(q) == 0) return std::nullopt;
    feet.push_back(project_onto_hyperplane(q, l));
    dirs.push_back(to_direction(feet.back() - q));
  }
  // Directions are multiples of the normals; a zero cross product means a
  // parallel pair of lines.
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      if (cross_sign(dirs[i], dirs[j]) == 0) return std::nullopt;
    }
  }
  return planar_depth_count(q, feet);
}

}  // namespace

DepthReport dual_depth_fast(const Point& q, const LineFamily& family) {
  require_planar(q);
  require_planar(family);
  const std::size_t n = family.size();
  if (n < 3) throw DomainError("dual depth needs at least 3 lines");
  if (auto count = projected_dual_count(q, family)) {
    return make_report(*count, binom(static_cast<std::int64_t>(n), 3), selection_bound(2), n);
  }
  auto r = dual_depth_naive(q, family);
  r.used_fallback = true;
  return r;
}

std::vector<CellSample> cell_samples(const LineFamily& family) {
  require_planar(family);
  require_general_position(family);
  const std::size_t n = family.size();
  std::vector<CellSample> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point v = *intersect(family.lines[i], family.lines[j]);
      const Point di = line_direction(family.lines[i]);
      const Point dj = line_direction(family.lines[j]);
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          const Point w = Scalar(si) * di + Scalar(sj) * dj;
          // Largest safe step: stay strictly on v's side of every other line.
          Scalar step = 1;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            const Scalar value = family.lines[k].evaluate(v);
            const Scalar rate = dot(family.lines[k].normal(), w);
            if (sgn(rate) != 0 && sgn(rate) != sgn(value)) {
              Scalar limit = abs(value / rate) / 2;
              if (limit < step) step = limit;
            }
          }
          out.push_back({v + step * w, v, i, j});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CellSample& a, const CellSample& b) {
    if (auto c = a.anchor <=> b.anchor; c != 0) return c < 0;
    return a.point < b.point;
  });
  return out;
}

MaxDualResult max_dual_depth_point(const LineFamily& family, unsigned threads) {
  require_planar(family);
  if (family.size() < 3) throw DomainError("max_dual_depth_point needs at least 3 lines");
  const auto samples = cell_samples(family);
  const auto counts = parallel_map(samples.size(), threads, [&](std::size_t s) {
    auto c = projected_dual_count(samples[s].point, family);
    if (!c) throw InternalError("cell sample lies on a line");
    return *c;
  });
  const std::size_t best = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
  MaxDualResult out{samples[best].point, samples[best].anchor,
                    dual_depth_naive(samples[best].point, family), 0};
  if (out.report.count != counts[best]) {
    throw InternalError("projected dual depth disagrees with triple enumeration");
  }
  out.closed_count_at_anchor = dual_depth_naive(out.anchor, family, 0).count;
  return out;
}

std::uint64_t base_cut_count(const Point& q, std::size_t i, const LineFamily& family) {
  require_planar(q);
  require_planar(family);
  const std::size_t n = family.size();
  if (i >= n) throw DomainError("line index out of range");
  if (on_any_line(q, family)) throw DegeneracyError("query lies on a line");
  const Hyperplane& base_line = family.lines[i];
  // Boundary of H: parallel to line i through q. H is the side away from line i.
  const Hyperplane boundary(base_line.normal(), dot(base_line.normal(), q));
  // Points of line i evaluate against `boundary` with the opposite sign of q
  // against line i, so H is where `boundary` has q's sign.
  const int away = base_line.side(q);
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    if (parallel(family.lines[j], base_line)) throw DegeneracyError("line parallel to base line", {{i, j}});
    for (std::size_t k = j + 1; k < n; ++k) {
      if (k == i) continue;
      auto apex = intersect(family.lines[j], family.lines[k]);
      if (!apex) throw DegeneracyError("parallel pair", {{j, k}});
      if (sgn(boundary.evaluate(*apex)) != away) continue;
      const Point a = *intersect(boundary, family.lines[j]);
      const Point b = *intersect(boundary, family.lines[k]);
      if (sgn(dot(a - q, b - q)) <= 0) ++count;
    }
  }
  return count;
}

std::size_t ExposureProfile::slot_of(const Point& direction) const {
  const Direction d = to_direction(direction);
  if (d.is_zero()) throw DomainError("zero direction");
  const std::size_t n = critical.size();
  std::size_t before = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (same_direction(critical[k], d)) return 2 * k;
    if (angle_less(critical[k], d)) ++before;
  }
  if (before == 0 || before == n) return 2 * n - 1;
  return 2 * (before - 1) + 1;
}

std::uint64_t ExposureProfile::slot_count_value(std::size_t slot) const {
  return slot % 2 == 0 ? endpoint_counts[slot / 2] : arc_counts[slot / 2];
}

ExposureProfile exposure_profile(const Point& q, const LineFamily& family) {
  require_planar(q);
  require_planar(family);
  const std::size_t n = family.size();
  if (n < 1) throw DomainError("exposure profile needs at least one line");
  ExposureProfile prof;
  prof.query = q;
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    if (family.lines[i].side(q) == 0) throw DegeneracyError("query lies on line " + std::to_string(i), {{i}});
    prof.projections.push_back(project_onto_hyperplane(q, family.lines[i]));
    dirs.push_back(to_direction(prof.projections.back() - q));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cross_sign(dirs[i], dirs[j]) == 0) {
        throw DegeneracyError("projections collinear with the query", {{i, j}});
      }
    }
  }
  prof.order.resize(n);
  std::iota(prof.order.begin(), prof.order.end(), 0);
  std::sort(prof.order.begin(), prof.order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(dirs[a], dirs[b]); });
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) {
    pos[prof.order[k]] = k;
    prof.critical.push_back(dirs[prof.order[k]]);
  }

  // Each pair's wedge is the counterclockwise run of arcs from its first to
  // its second direction (the short way round).
  std::vector<std::int64_t> diff(n + 1, 0);
  std::vector<std::uint64_t> starts(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      std::size_t s = pos[j], e = pos[k];
      if (cross_sign(dirs[j], dirs[k]) < 0) std::swap(s, e);
      ++starts[s];
      if (s < e) {
        ++diff[s];
        --diff[e];
      } else {
        ++diff[s];
        --diff[n];
        ++diff[0];
        --diff[e];
      }
    }
  }
  prof.arc_counts.resize(n);
  std::int64_t running = 0;
  for (std::size_t k = 0; k < n; ++k) {
    running += diff[k];
    prof.arc_counts[k] = static_cast<std::uint64_t>(running);
  }
  prof.endpoint_counts.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    prof.endpoint_counts[k] = prof.arc_counts[(k + n - 1) % n] + starts[k];
  }
  prof.pair_total = n * (n - 1) / 2;
  return prof;
}

bool is_exposed_count(std::uint64_t count, std::uint64_t pair_total) {
  return 9 * count < 2 * pair_total;
}

const char* to_string(ArcFlag flag) {
  return flag == ArcFlag::Exposed ? "EXPOSED" : "ALMOST_EXPOSED";
}

bool DirectionArcSet::empty() const {
  return std::none_of(member.begin(), member.end(), [](bool b) { return b; });
}

bool DirectionArcSet::proper() const {
  return !std::all_of(member.begin(), member.end(), [](bool b) { return b; });
}

bool DirectionArcSet::connected() const {
  const std::size_t m = member.size();
  std::size_t runs = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (member[s] && !member[(s + m - 1) % m]) ++runs;
  }
  return runs <= 1;
}

namespace {

Point slot_start(const ExposureProfile& p, std::size_t slot, bool& closed) {
  closed = slot % 2 == 0;
  return to_point(p.critical[slot / 2]);
}

Point slot_end(const ExposureProfile& p, std::size_t slot, bool& closed) {
  closed = slot % 2 == 0;
  return to_point(p.critical[closed ? slot / 2 : (slot / 2 + 1) % p.critical.size()]);
}

// Maximal runs of slots with equal nonzero `state`, read cyclically.
// state: 0 = outside, 1 = exposed, 2 = almost exposed only.
std::vector<DirectionArc> arcs_from_slots(const ExposureProfile& p, const std::vector<int>& state) {
  const std::size_t m = state.size();
  std::vector<DirectionArc> arcs;
  if (std::all_of(state.begin(), state.end(), [&](int s) { return s == state[0]; })) {
    if (state[0] == 0) return arcs;
    DirectionArc full;
    full.full_circle = true;
    full.start = full.end = to_point(p.critical[0]);
    full.start_closed = full.end_closed = true;
    full.flag = state[0] == 1 ? ArcFlag::Exposed : ArcFlag::AlmostExposed;
    arcs.push_back(full);
    return arcs;
  }
  // Start scanning just after a change of state so no run wraps the origin.
  std::size_t origin = 0;
  while (state[origin] == state[(origin + m - 1) % m]) ++origin;
  for (std::size_t t = 0; t < m;) {
    const std::size_t s = (origin + t) % m;
    std::size_t len = 1;
    while (t + len < m && state[(origin + t + len) % m] == state[s]) ++len;
    if (state[s] != 0) {
      DirectionArc arc;
      arc.start = slot_start(p, s, arc.start_closed);
      arc.end = slot_end(p, (s + len - 1) % m, arc.end_closed);
      arc.flag = state[s] == 1 ? ArcFlag::Exposed : ArcFlag::AlmostExposed;
      arcs.push_back(arc);
    }
    t += len;
  }
  return arcs;
}

}  // namespace

DirectionArcSet exposed_arcs(const ExposureProfile& profile) {
  const std::size_t m = profile.slot_count();
  DirectionArcSet out;
  out.exposed.resize(m);
  std::vector<int> state(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    out.exposed[s] = is_exposed_count(profile.slot_count_value(s), profile.pair_total);
    state[s] = out.exposed[s] ? 1 : 0;
  }
  out.member = out.exposed;
  out.arcs = arcs_from_slots(profile, state);
  return out;
}

DirectionArcSet exposed_arcs(const Point& q, const LineFamily& family) {
  return exposed_arcs(exposure_profile(q, family));
}

DirectionArcSet almost_exposed_arcs(const ExposureProfile& profile) {
  DirectionArcSet out = exposed_arcs(profile);
  const std::size_t m = profile.slot_count();
  const std::size_t n = profile.critical.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (!out.exposed[a]) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a || !out.exposed[b]) continue;
      // Projections strictly inside the counterclockwise region from ray a to ray b.
      std::size_t inside = 0;
      for (std::size_t s = (a + 1) % m; s != b; s = (s + 1) % m) inside += (s % 2 == 0);
      if (3 * inside >= n) continue;
      for (std::size_t s = (a + 1) % m; s != b; s = (s + 1) % m) out.member[s] = true;
    }
  }
  std::vector<int> state(m, 0);
  for (std::size_t s = 0; s < m; ++s) state[s] = out.exposed[s] ? 1 : (out.member[s] ? 2 : 0);
  out.arcs = arcs_from_slots(profile, state);
  return out;
}

DirectionArcSet almost_exposed_arcs(const Point& q, const LineFamily& family) {
  return almost_exposed_arcs(exposure_profile(q, family));
}

std::optional<Point> find_unexposed_point(const LineFamily& family) {
  require_planar(family);
  if (family.size() < 3) return std::nullopt;
  auto samples = cell_samples(family);
  std::vector<Point> points;
  points.reserve(samples.size());
  for (auto& s : samples) points.push_back(std::move(s.point));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& q : points) {
    if (exposed_arcs(q, family).empty()) return q;
  }
  return std::nullopt;
}

LineFamily tangent_family(std::size_t n, std::optional<std::vector<Scalar>> params) {
  if (n < 3) throw DomainError("tangent_family needs n >= 3");
  std::vector<Scalar> ts;
  if (params) {
    ts = std::move(*params);
    if (ts.size() != n) throw DomainError("tangent_family: expected " + std::to_string(n) + " parameters");
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      ts.push_back(make_scalar(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n - 1)));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (ts[k] < 0 || ts[k] > 1) throw DomainError("tangent parameters must lie in [0, 1]");
    if (k > 0 && !(ts[k - 1] < ts[k])) throw DomainError("tangent parameters must be distinct and ascending");
  }
  LineFamily family;
  family.provenance = "tangent_family(" + std::to_string(n) + ")";
  for (const auto& t : ts) {
    const Scalar w = 1 + t * t;
    family.lines.push_back(make_line((1 - t * t) / w, 2 * t / w, 1));
  }
  return family;
}

TangentClassification classify_tangents(const Point& q, const LineFamily& family) {
  require_planar(q);
  require_planar(family);
  if (squared_norm(q) <= 1) throw DegeneracyError("query is not strictly outside the unit circle");
  const Point origin{0, 0};
  TangentClassification out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& l = family.lines[i];
    if (l.offset() * l.offset() != squared_norm(l.normal())) {
      throw DomainError("line " + std::to_string(i) + " is not tangent to the unit circle");
    }
    if (l.side(q) == 0) throw DegeneracyError("query lies on line " + std::to_string(i), {{i}});
    const Point touch = project_onto_hyperplane(origin, l);
    if (dot(q, touch) > 1) {
      ++out.n2;
      continue;
    }
    const int turn = sgn(q[0] * touch[1] - q[1] * touch[0]);
    if (turn < 0) {
      ++out.n1;
    } else {
      ++out.n3;  // includes the antipodal tangency (angle pi from q)
    }
  }
  return out;
}

ExtremalReport extremal_report(std::size_t n, unsigned threads) {
  const LineFamily family = tangent_family(n);
  const auto best = max_dual_depth_point(family, threads);
  ExtremalReport r;
  r.n = n;
  r.max_count = best.report.count;
  r.total = best.report.total;
  const std::uint64_t cube = static_cast<std::uint64_t>(n) * n * n;
  r.product_bound = cube / 27;
  r.product_bound_exact = make_scalar(static_cast<std::int64_t>(cube), 27);
  r.gromov_floor = selection_bound(2) * Scalar(static_cast<long>(r.total));
  r.max_fraction = best.report.fraction;
  r.product_fraction = r.product_bound_exact / Scalar(static_cast<long>(r.total));
  r.within_product_bound = r.max_count <= r.product_bound;
  r.witness = best.point;
  r.anchor = best.anchor;
  r.classes = classify_tangents(best.point, family);
  return r;
}

}  // namespace hcover
