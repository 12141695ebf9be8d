#include "hcover/battery.hpp"

#include <random>

#include "hcover/transversal.hpp"

namespace hcover {

namespace {

std::uint64_t seed_for(const BatteryConfig& cfg, int check, std::size_t trial) {
  return cfg.seed * 1'000'003ULL + static_cast<std::uint64_t>(check) * 100'003ULL + trial;
}

class Queries {
 public:
  explicit Queries(std::uint64_t seed) : rng_(seed) {}

  Scalar coordinate(std::int64_t range) {
    const auto span = static_cast<std::uint64_t>(2 * range * 16 + 1);
    return make_scalar(static_cast<std::int64_t>(rng_() % span) - range * 16, 16);
  }
  Point point(std::int64_t range) { return Point{coordinate(range), coordinate(range)}; }
  Point point3(std::int64_t range) { return Point{coordinate(range), coordinate(range), coordinate(range)}; }

  Point off_lines(const LineFamily& f, std::int64_t range) {
    while (true) {
      Point q = point(range);
      bool on = false;
      for (const auto& l : f.lines) on |= l.side(q) == 0;
      if (!on) return q;
    }
  }

 private:
  std::mt19937_64 rng_;
};

Json fraction_json(const Scalar& s) { return scalar_json(s); }

}  // namespace

Json check_json(const CheckResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"details", r.details}};
}

CheckResult check_oracle_equivalence(const BatteryConfig& cfg) {
  std::size_t depth_cases = 0, depth_mismatches = 0;
  for (std::size_t t = 0; t < 4 * cfg.trials; ++t) {
    const std::size_t n = 3 + t % 28;
    const auto set = generate("POINTS", n, seed_for(cfg, 1, t)).points;
    Queries qs(seed_for(cfg, 1, t));
    std::vector<Point> queries{qs.point(50), make_scalar(1, 3) * (set.points[0] + set.points[1] + set.points[2])};
    if (n >= 4) {
      if (auto x = intersect(line_through(set.points[0], set.points[1]), line_through(set.points[2], set.points[3]))) {
        queries.push_back(*x);
      }
    }
    for (const auto& q : queries) {
      if (std::find(set.points.begin(), set.points.end(), q) != set.points.end()) continue;
      ++depth_cases;
      depth_mismatches += depth_planar_sweep(q, set).count != depth_naive(q, set).count;
    }
  }

  std::size_t dual_cases = 0, dual_mismatches = 0, dual_fallbacks = 0;
  for (std::size_t t = 0; t < 4 * cfg.trials; ++t) {
    const std::size_t n = 3 + t % 18;
    const auto family = generate("LINES", n, seed_for(cfg, 1, 10'000 + t)).lines;
    Queries qs(seed_for(cfg, 1, 10'000 + t));
    std::vector<Point> queries{qs.point(30), *intersect(family.lines[0], family.lines[1])};
    for (const auto& q : queries) {
      ++dual_cases;
      const auto fast = dual_depth_fast(q, family);
      dual_fallbacks += fast.used_fallback;
      dual_mismatches += fast.count != dual_depth_naive(q, family).count;
    }
  }

  std::size_t triple_cases = 0, triple_mismatches = 0, triple_surrounded = 0;
  Queries qs(seed_for(cfg, 1, 20'000));
  for (std::size_t t = 0; t < 200 * cfg.trials; ++t) {
    const auto family = generate("LINES", 3, seed_for(cfg, 1, 30'000 + t), {.range = 10}).lines;
    const Point q = qs.off_lines(family, 10);
    const auto& l = family.lines;
    const bool direct = surround_direct(q, l[0], l[1], l[2]);
    ++triple_cases;
    triple_surrounded += direct;
    triple_mismatches += surround_projection(q, l[0], l[1], l[2]) != direct;
  }

  CheckResult r{"oracle_equivalence", depth_mismatches == 0 && dual_mismatches == 0 && triple_mismatches == 0, {}};
  r.details = Json{{"depth_sweep_vs_naive", {{"queries", depth_cases}, {"mismatches", depth_mismatches}}},
                   {"dual_fast_vs_naive",
                    {{"queries", dual_cases}, {"mismatches", dual_mismatches}, {"fallbacks", dual_fallbacks}}},
                   {"surround_projection_vs_direct",
                    {{"triples", triple_cases}, {"mismatches", triple_mismatches}, {"surrounded", triple_surrounded}}}};
  return r;
}

namespace {

struct BoundTally {
  std::size_t trials = 0, meets_slack = 0, meets_bound = 0;
  Scalar min_fraction = 1;
  Json json() const {
    return Json{{"trials", trials},
                {"meets_slack_bound", meets_slack},
                {"meets_bound", meets_bound},
                {"min_fraction", fraction_json(min_fraction)}};
  }
  void add(const DepthReport& rep) {
    ++trials;
    meets_slack += rep.meets_slack_bound;
    meets_bound += rep.meets_bound;
    min_fraction = std::min(min_fraction, rep.fraction);
  }
};

}  // namespace

CheckResult check_selection_bound(const BatteryConfig& cfg) {
  std::map<std::size_t, BoundTally> by_n;
  bool ok = true;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = std::array<std::size_t, 3>{10, 15, 20}[t % 3];
    const auto set = generate("POINTS", n, seed_for(cfg, 2, t)).points;
    const auto best = max_depth_point(set, cfg.threads);
    by_n[n].add(best.report);
    ok &= best.report.meets_slack_bound;
  }
  CheckResult r{"selection_bound", ok, Json::object()};
  r.details["bound"] = fraction_json(selection_bound(2));
  r.details["slack_constant"] = kSlackConstant;
  for (const auto& [n, tally] : by_n) r.details["n=" + std::to_string(n)] = tally.json();
  return r;
}

CheckResult check_dual_bound(const BatteryConfig& cfg) {
  std::map<std::size_t, BoundTally> by_n;
  bool ok = true;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = std::array<std::size_t, 3>{8, 10, 12}[t % 3];
    const auto family = generate("LINES", n, seed_for(cfg, 3, t)).lines;
    const auto best = max_dual_depth_point(family, cfg.threads);
    by_n[n].add(best.report);
    ok &= best.report.meets_slack_bound;
  }
  CheckResult r{"dual_bound", ok, Json::object()};
  r.details["bound"] = fraction_json(make_scalar(2, 9));
  r.details["slack_constant"] = kSlackConstant;
  for (const auto& [n, tally] : by_n) r.details["n=" + std::to_string(n)] = tally.json();
  return r;
}

CheckResult check_tightness(const BatteryConfig& cfg) {
  CheckResult r{"tightness", true, Json::array()};
  std::optional<Scalar> previous_gap;
  for (std::size_t n : {9, 12, 18}) {
    const auto rep = extremal_report(n, cfg.threads);
    Scalar gap = rep.max_fraction - make_scalar(2, 9);
    if (sgn(gap) < 0) gap = -gap;
    const bool closer = !previous_gap || gap < *previous_gap;
    r.passed &= rep.within_product_bound && closer;
    previous_gap = gap;
    r.details.push_back(Json{{"n", n},
                             {"max_count", rep.max_count},
                             {"product_bound", rep.product_bound},
                             {"total", rep.total},
                             {"max_fraction", fraction_json(rep.max_fraction)},
                             {"distance_to_2/9", fraction_json(gap)},
                             {"closer_than_previous", closer},
                             {"within_product_bound", rep.within_product_bound},
                             {"witness", point_json(rep.witness)},
                             {"classes", {rep.classes.n1, rep.classes.n2, rep.classes.n3}}});
  }
  return r;
}

CheckResult check_base_cut_identity(const BatteryConfig& cfg) {
  std::size_t instances = 0, sum_mismatches = 0, line_mismatches = 0;
  for (std::size_t t = 0; t < 2 * cfg.trials; ++t) {
    const std::size_t n = 3 + t % 10;
    const auto family = generate("LINES", n, seed_for(cfg, 5, t)).lines;
    const Point q = Queries(seed_for(cfg, 5, t)).off_lines(family, 30);
    std::vector<std::uint64_t> filtered(n, 0);
    std::uint64_t depth = 0;
    for_each_combination(n, 3, [&](const std::vector<std::size_t>& idx) {
      if (surround_direct(q, family.lines[idx[0]], family.lines[idx[1]], family.lines[idx[2]])) {
        ++depth;
        for (auto i : idx) ++filtered[i];
      }
      return true;
    });
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto cut = base_cut_count(q, i, family);
      line_mismatches += cut != filtered[i];
      sum += cut;
    }
    sum_mismatches += sum != 3 * dual_depth_naive(q, family).count || depth != dual_depth_naive(q, family).count;
    ++instances;
  }
  return CheckResult{"base_cut_identity", sum_mismatches == 0 && line_mismatches == 0,
                     Json{{"instances", instances},
                          {"sum_mismatches", sum_mismatches},
                          {"per_line_mismatches", line_mismatches}}};
}

CheckResult check_exposure_semantics(const BatteryConfig& cfg) {
  std::size_t instances = 0, directions = 0, mismatches = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = 3 + t % 10;
    const auto family = generate("LINES", n, seed_for(cfg, 6, t)).lines;
    const Point q = Queries(seed_for(cfg, 6, t)).off_lines(family, 30);
    const auto profile = exposure_profile(q, family);
    const std::size_t m = profile.critical.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Point from = to_point(profile.critical[k]), to = to_point(profile.critical[(k + 1) % m]);
      for (const auto& dir : directions_in_arc(from, to, 3)) {
        std::uint64_t crossings = 0;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            crossings += segment_crosses_ray(profile.projections[a], profile.projections[b], q, dir);
          }
        }
        ++directions;
        mismatches += crossings != profile.arc_counts[k];
      }
    }
    ++instances;
  }
  return CheckResult{"exposure_semantics", mismatches == 0,
                     Json{{"instances", instances}, {"directions", directions}, {"mismatches", mismatches}}};
}

namespace {

// Line base + s v against triangle abc by Cramer's rule; -1 when parallel.
int line_meets_triangle(const Point& base, const Point& v, const Point& a, const Point& b, const Point& c) {
  auto det3 = [](const Point& x, const Point& y, const Point& z) -> Scalar {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - y[0] * (x[1] * z[2] - x[2] * z[1]) +
           z[0] * (x[1] * y[2] - x[2] * y[1]);
  };
  const Point e1 = b - a, e2 = c - a, rhs = base - a, nv = Scalar(-1) * v;
  const Scalar det = det3(nv, e1, e2);
  if (sgn(det) == 0) return -1;
  const Scalar l2 = det3(nv, rhs, e2) / det, l3 = det3(nv, e1, rhs) / det;
  return sgn(l2) >= 0 && sgn(l3) >= 0 && l2 + l3 <= 1;
}

}  // namespace

CheckResult check_transversal(const BatteryConfig& cfg) {
  std::size_t pairs = 0, floor_failures = 0, full_half = 0, sets = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::array<std::size_t, 3> sizes{6, 9, 12};
    const auto p0 = generate("POINTS", sizes[t % 3], seed_for(cfg, 7, 2 * t)).points;
    const auto p1 = generate("POINTS", sizes[(t + 1) % 3], seed_for(cfg, 7, 2 * t + 1)).points;
    const auto line = find_transversal_line_2d(p0, p1);
    for (std::size_t i = 0; i < 2; ++i) {
      ++sets;
      floor_failures += line.report.sets[i].fraction < line.floors[i];
      full_half += line.report.sets[i].meets_bound;
    }
    ++pairs;
  }

  std::size_t space_instances = 0, space_mismatches = 0, parallel_skips = 0;
  for (std::size_t t = 0; t < std::max<std::size_t>(1, cfg.trials / 5); ++t) {
    Queries qs(seed_for(cfg, 7, 50'000 + t));
    std::vector<PointSet> pts(2);
    for (auto& s : pts) {
      for (int i = 0; i < 6; ++i) s.points.push_back(qs.point3(4));
    }
    const Point base = qs.point3(1);
    Point dir = qs.point3(3);
    if (dir.is_zero()) dir = Point{1, 2, 3};
    const auto flat = make_flat(base, {dir});
    const auto report = verify_transversal(flat, pts);
    for (std::size_t s = 0; s < 2; ++s) {
      std::uint64_t expected = 0;
      const auto& p = pts[s].points;
      bool usable = true;
      for_each_combination(6, 3, [&](const std::vector<std::size_t>& idx) {
        const int hit = line_meets_triangle(base, dir, p[idx[0]], p[idx[1]], p[idx[2]]);
        if (hit < 0) usable = false;
        expected += hit > 0;
        return usable;
      });
      if (!usable) {
        ++parallel_skips;
        continue;
      }
      space_mismatches += report.sets[s].count != expected;
    }
    ++space_instances;
  }
  CheckResult r{"transversal", floor_failures == 0 && space_mismatches == 0, {}};
  r.details = Json{{"planar", {{"pairs", pairs}, {"floor_failures", floor_failures}, {"sets_meeting_one_half", full_half},
                               {"sets", sets}}},
                   {"space_line",
                    {{"instances", space_instances}, {"mismatches", space_mismatches}, {"parallel_skips", parallel_skips}}}};
  return r;
}

CheckResult check_continuity(const BatteryConfig& cfg) {
  const Scalar tau = slackened(make_scalar(2, 9), 10);
  std::size_t paths = 0, samples = 0, degenerate = 0, missing = 0, missing_unslackened = 0;
  for (std::size_t t = 0; t < std::max<std::size_t>(1, cfg.trials / 5); ++t) {
    const auto path = *generate("PATH", 10, seed_for(cfg, 8, t), {.keyframes = 3}).path;
    const auto rep = continuity_demo(path, 101, tau, std::nullopt, cfg.threads);
    const auto strict = continuity_demo(path, 101, make_scalar(2, 9), std::nullopt, cfg.threads);
    ++paths;
    samples += rep.records.size();
    degenerate += rep.degenerate_samples;
    missing += rep.missing_witnesses;
    missing_unslackened += strict.missing_witnesses;
  }
  const auto orbit = continuity_demo(orbit_path(kOrbitJumpSeed), 101, slackened(make_scalar(2, 9), 5), std::nullopt,
                                     cfg.threads);
  Json jumps = Json::array();
  for (const auto& e : orbit.jumps) {
    jumps.push_back(Json{{"before", e.before},
                         {"after", e.after},
                         {"from", point_json(e.from)},
                         {"to", point_json(e.to)},
                         {"from_count", e.from_count},
                         {"to_count", e.to_count}});
  }
  CheckResult r{"continuity", missing == 0 && orbit.missing_witnesses == 0 && !orbit.jumps.empty(), {}};
  r.details = Json{{"tau", fraction_json(tau)},
                   {"paths", paths},
                   {"samples", samples},
                   {"degenerate_samples", degenerate},
                   {"missing_witnesses", missing},
                   {"missing_witnesses_at_2/9", missing_unslackened},
                   {"orbit_fixture", {{"seed", kOrbitJumpSeed}, {"jumps", jumps}}}};
  return r;
}

namespace {

int orient(const Point& a, const Point& b, const Point& c) {
  return sgn((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

// Closed triangle test by facet signs, for non-degenerate triangles.
bool in_triangle(const Point& q, const Point& a, const Point& b, const Point& c) {
  const Point v[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    const Point &p0 = v[(i + 1) % 3], &p1 = v[(i + 2) % 3];
    const int side = orient(p0, p1, q);
    if (side != 0 && side != orient(p0, p1, v[i])) return false;
  }
  return true;
}

}  // namespace

CheckResult check_module_oracles(const BatteryConfig& cfg) {
  Json d = Json::object();
  bool ok = true;
  Queries qs(seed_for(cfg, 10, 0));

  std::size_t simplex_cases = 0, simplex_mismatches = 0;
  for (std::size_t t = 0; t < 200 * cfg.trials; ++t) {
    const Point a = qs.point(5), b = qs.point(5), c = qs.point(5), q = qs.point(5);
    if (orient(a, b, c) == 0) continue;
    const std::vector<Point> tri{a, b, c};
    ++simplex_cases;
    simplex_mismatches += closed_contains(point_in_simplex(q, tri)) != in_triangle(q, a, b, c);
  }
  d["point_in_simplex"] = {{"cases", simplex_cases}, {"mismatches", simplex_mismatches}};
  ok &= simplex_mismatches == 0;

  std::size_t colorful_mismatches = 0, optimality_failures = 0, witness_failures = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto set = generate("COLORED_POINTS", 9, seed_for(cfg, 10, t)).points;
    const Point q = qs.point(30);
    std::uint64_t rainbow = 0;
    for (std::size_t i = 0; i < 9; i += 3)
      for (std::size_t j = 1; j < 9; j += 3)
        for (std::size_t k = 2; k < 9; k += 3) rainbow += in_triangle(q, set.points[i], set.points[j], set.points[k]);
    colorful_mismatches += colorful_depth(q, set).count != rainbow;

    const PointSet plain = make_point_set(set.points);
    const auto best = max_depth_point(plain, cfg.threads);
    const auto total = binom(9, 3);
    auto at_max = heavy_region_witness(plain, make_scalar(static_cast<std::int64_t>(best.report.count), total));
    auto above = heavy_region_witness(plain, make_scalar(static_cast<std::int64_t>(best.report.count) + 1, total));
    witness_failures += !at_max || at_max->count < best.report.count || above.has_value();
    if (t % 5 == 0) {
      for (const auto& c : candidate_vertices(plain).points) {
        optimality_failures += depth_naive(c, plain).count > best.report.count;
      }
    }
  }
  d["colorful_depth"] = {{"sets", cfg.trials}, {"mismatches", colorful_mismatches}};
  d["max_depth_optimality"] = {{"sets", (cfg.trials + 4) / 5}, {"failures", optimality_failures}};
  d["heavy_witness"] = {{"sets", cfg.trials}, {"failures", witness_failures}};
  ok &= colorful_mismatches == 0 && optimality_failures == 0 && witness_failures == 0;

  const auto tangent = tangent_family(9);
  std::size_t tangent_cases = 0, tangent_failures = 0;
  for (std::size_t t = 0; t < 4 * cfg.trials; ++t) {
    const Point q = qs.point(3);
    if (squared_norm(q) <= 1) continue;
    bool on = false;
    for (const auto& l : tangent.lines) on |= l.side(q) == 0;
    if (on) continue;
    ++tangent_cases;
    tangent_failures += dual_depth_naive(q, tangent).count > classify_tangents(q, tangent).product();
  }
  d["tangent_product_bound"] = {{"queries", tangent_cases}, {"failures", tangent_failures}};
  ok &= tangent_failures == 0;

  std::size_t touch_cases = 0, touch_mismatches = 0;
  for (std::size_t t = 0; t < 100 * cfg.trials; ++t) {
    const Point a = qs.point(5), b = qs.point(5), base = qs.point(5), dir = qs.point(3);
    if (dir.is_zero()) continue;
    const auto flat = make_flat(base, {dir});
    const Hyperplane line = line_through(base, base + dir);
    const std::vector<Point> pair{a, b};
    ++touch_cases;
    touch_mismatches += tuple_touches_flat(pair, flat) != (line.side(a) * line.side(b) <= 0);
  }
  d["planar_flat_touch"] = {{"pairs", touch_cases}, {"mismatches", touch_mismatches}};
  ok &= touch_mismatches == 0;

  return CheckResult{"module_oracles", ok, d};
}

Json battery_json(const BatteryConfig& cfg, const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all &= r.passed;
    checks.push_back(check_json(r));
  }
  return Json{{"seed", cfg.seed}, {"trials", cfg.trials}, {"checks", checks}, {"passed", all}};
}

Json run_battery(const BatteryConfig& cfg) {
  std::vector<CheckResult> results;
  for (auto* check : {check_oracle_equivalence, check_selection_bound, check_dual_bound, check_tightness,
                      check_base_cut_identity, check_exposure_semantics, check_transversal, check_continuity, check_module_oracles}) {
    results.push_back(check(cfg));
  }
  return battery_json(cfg, results);
}

}  // namespace hcover
