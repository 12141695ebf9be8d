#include "hcover/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hcover/battery.hpp"
#include "hcover/svg.hpp"
#include "hcover/transversal.hpp"

namespace hcover {

namespace {

struct Options {
  std::string in, out, plot, point, tau, threshold, generator;
  std::uint64_t seed = 42;
  std::size_t trials = 50, samples = 101, n = 10, grid = 0;
  unsigned threads = 1;
  std::size_t extremal_n = 0;
};

// Thrown for input problems the user can fix; maps to exit 1.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << bytes;
}

Point parse_point(const std::string& text) {
  std::vector<Scalar> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      c.push_back(parse_scalar(part));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad coordinate \"" + part + "\" in --point");
    }
  }
  if (c.empty()) throw UsageError("--point needs coordinates");
  return Point(std::move(c));
}

Scalar parse_exact(const std::string& text, const char* flag) {
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("bad rational for ") + flag + ": " + text);
  }
}

Dataset load(const Options& o, const char* default_generator, const GenerateOptions& gen = {}) {
  if (!o.in.empty()) return parse_dataset(read_file(o.in));
  return generate(o.generator.empty() ? default_generator : o.generator, o.n, o.seed, gen);
}

const PointSet& need_points(const Dataset& ds) {
  if (ds.kind != DatasetKind::Points && ds.kind != DatasetKind::ColoredPoints) {
    throw UsageError("expected a POINTS or COLORED_POINTS dataset");
  }
  return ds.points;
}

const LineFamily& need_lines(const Dataset& ds) {
  if (ds.kind != DatasetKind::Lines) throw UsageError("expected a LINES dataset");
  return ds.lines;
}

Point need_point(const Options& o) {
  if (o.point.empty()) throw UsageError("--point is required");
  return parse_point(o.point);
}

std::size_t grid_or(const Options& o, std::size_t fallback) { return o.grid ? o.grid : fallback; }

std::string fraction_text(const DepthReport& r) {
  return std::to_string(r.count) + " / " + std::to_string(r.total) + " = " + to_string(r.fraction);
}

struct Outcome {
  Json report;
  bool bound_ok = true;
};

Outcome cmd_depth(const Options& o, std::ostream& out) {
  const Dataset ds = load(o, "POINTS");
  const PointSet& set = need_points(ds);
  const Point q = need_point(o);
  require_same_dim(q, set.points.at(0));
  const bool on_point = std::find(set.points.begin(), set.points.end(), q) != set.points.end();
  DepthReport r = set.dim() == 2 && !on_point ? depth_planar_sweep(q, set) : depth_naive(q, set);
  if (set.dim() == 2 && !on_point) {
    const auto naive = depth_naive(q, set);
    r.witnesses = naive.witnesses;
    r.boundary_count = naive.boundary_count;
  }
  out << "depth of " << to_string(q) << ": " << fraction_text(r) << "\n";
  Json report{{"query", point_json(q)}, {"depth", depth_report_json(r)}};
  if (set.colors) {
    const auto c = colorful_depth(q, set);
    out << "colorful depth: " << fraction_text(c) << "\n";
    report["colorful_depth"] = depth_report_json(c);
  }
  if (!o.plot.empty()) write_file(o.plot, depth_svg(set, q, grid_or(o, kDefaultGrid)));
  return {report, true};
}

Outcome cmd_maxdepth(const Options& o, std::ostream& out) {
  const Dataset ds = load(o, "POINTS");
  const PointSet& set = need_points(ds);
  const auto best = max_depth_point(set, o.threads);
  out << "max depth point " << to_string(best.point) << ": " << fraction_text(best.report) << "\n"
      << "bound " << to_string(best.report.bound) << (best.report.meets_bound ? " met" : " not met")
      << ", slackened " << to_string(best.report.slack_bound)
      << (best.report.meets_slack_bound ? " met" : " NOT MET") << "\n";
  if (!o.plot.empty()) write_file(o.plot, depth_svg(set, best.point, grid_or(o, kDefaultGrid)));
  return {Json{{"point", point_json(best.point)}, {"depth", depth_report_json(best.report)}},
          best.report.meets_slack_bound};
}

Outcome cmd_dual(const Options& o, std::ostream& out) {
  const Dataset ds = load(o, "LINES");
  const LineFamily& f = need_lines(ds);
  const Point q = need_point(o);
  const auto r = dual_depth_fast(q, f);
  out << "dual depth of " << to_string(q) << ": " << fraction_text(r) << (r.used_fallback ? " (enumerated)" : "")
      << "\n";
  if (!o.plot.empty()) write_file(o.plot, dual_svg(f, q, grid_or(o, kDefaultGrid)));
  return {Json{{"query", point_json(q)}, {"dual_depth", depth_report_json(r)}}, true};
}

Outcome cmd_maxdual(const Options& o, std::ostream& out) {
  const Dataset ds = load(o, "LINES");
  const LineFamily& f = need_lines(ds);
  const auto best = max_dual_depth_point(f, o.threads);
  out << "max dual depth " << fraction_text(best.report) << " at " << to_string(best.point) << " next to vertex "
      << to_string(best.anchor) << " (closed count there " << best.closed_count_at_anchor << ")\n"
      << "bound 2/9" << (best.report.meets_bound ? " met" : " not met") << ", slackened "
      << to_string(best.report.slack_bound) << (best.report.meets_slack_bound ? " met" : " NOT MET") << "\n";
  if (!o.plot.empty()) write_file(o.plot, dual_svg(f, best.point, grid_or(o, kDefaultGrid)));
  return {Json{{"point", point_json(best.point)},
               {"anchor", point_json(best.anchor)},
               {"closed_count_at_anchor", best.closed_count_at_anchor},
               {"dual_depth", depth_report_json(best.report)}},
          best.report.meets_slack_bound};
}

Json arcs_json(const DirectionArcSet& s) {
  Json arcs = Json::array();
  for (const auto& a : s.arcs) {
    arcs.push_back(Json{{"start", point_json(a.start)},
                        {"end", point_json(a.end)},
                        {"start_closed", a.start_closed},
                        {"end_closed", a.end_closed},
                        {"full_circle", a.full_circle},
                        {"flag", a.flag == ArcFlag::Exposed ? "EXPOSED" : "ALMOST_EXPOSED"}});
  }
  return Json{{"arcs", arcs}, {"empty", s.empty()}, {"proper", s.proper()}, {"connected", s.connected()}};
}

Outcome cmd_expose(const Options& o, std::ostream& out) {
  const Dataset ds = load(o, "LINES");
  const LineFamily& f = need_lines(ds);
  const Point q = need_point(o);
  const auto p = exposure_profile(q, f);
  const auto e = exposed_arcs(p);
  const auto fq = almost_exposed_arcs(p);
  Json critical = Json::array();
  for (std::size_t k = 0; k < p.critical.size(); ++k) {
    critical.push_back(Json{{"direction", point_json(to_point(p.critical[k]))},
                            {"line", p.order[k]},
                            {"count", p.endpoint_counts[k]},
                            {"arc_after_count", p.arc_counts[k]}});
  }
  out << "exposure of " << to_string(q) << ": " << p.critical.size() << " critical directions, " << e.arcs.size()
      << " exposed arcs, " << fq.arcs.size() << " arcs in the almost-exposed set\n";
  for (const auto& a : e.arcs) {
    out << "  exposed " << (a.start_closed ? "[" : "(") << to_string(a.start) << ", " << to_string(a.end)
        << (a.end_closed ? "]" : ")") << "\n";
  }
  return {Json{{"query", point_json(q)},
               {"pair_total", p.pair_total},
               {"critical", critical},
               {"exposed", arcs_json(e)},
               {"almost_exposed", arcs_json(fq)}},
          true};
}

Outcome cmd_extremal(const Options& o, std::ostream& out) {
  const auto r = extremal_report(o.extremal_n, o.threads);
  out << "tangent family n=" << r.n << ": max dual count " << r.max_count << " of " << r.total << ", product bound "
      << r.product_bound << (r.within_product_bound ? " (within)" : " (EXCEEDED)") << ", classes " << r.classes.n1
      << "/" << r.classes.n2 << "/" << r.classes.n3 << "\n";
  if (!o.plot.empty()) write_file(o.plot, dual_svg(tangent_family(r.n), r.witness, grid_or(o, kDefaultGrid)));
  return {Json{{"n", r.n},
               {"max_count", r.max_count},
               {"total", r.total},
               {"product_bound", r.product_bound},
               {"product_bound_exact", scalar_json(r.product_bound_exact)},
               {"gromov_floor", scalar_json(r.gromov_floor)},
               {"max_fraction", scalar_json(r.max_fraction)},
               {"product_fraction", scalar_json(r.product_fraction)},
               {"within_product_bound", r.within_product_bound},
               {"witness", point_json(r.witness)},
               {"anchor", point_json(r.anchor)},
               {"classes", {{"n1", r.classes.n1}, {"n2", r.classes.n2}, {"n3", r.classes.n3}}}},
          r.within_product_bound};
}

Outcome cmd_transversal(const Options& o, std::ostream& out) {
  PointSet p0, p1;
  if (!o.in.empty()) {
    const Dataset ds = parse_dataset(read_file(o.in));
    if (ds.kind != DatasetKind::ColoredPoints) throw UsageError("transversal expects COLORED_POINTS with colors 0 and 1");
    for (std::size_t i = 0; i < ds.points.size(); ++i) {
      const int c = (*ds.points.colors)[i];
      if (c != 0 && c != 1) throw UsageError("transversal expects colors 0 and 1 only");
      (c == 0 ? p0 : p1).points.push_back(ds.points.points[i]);
    }
  } else {
    p0 = generate("POINTS", o.n, o.seed).points;
    p1 = generate("POINTS", o.n, o.seed + 1).points;
  }
  const auto t = find_transversal_line_2d(p0, p1);
  Json sets = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& s = t.report.sets[i];
    ok &= s.meets_slack_bound;
    out << "set " << i << ": " << s.count << " / " << s.total << " pairs touch, floor " << to_string(t.floors[i])
        << ", 1/2 " << (s.meets_bound ? "met" : "not met") << "\n";
    sets.push_back(Json{{"count", s.count},
                        {"total", s.total},
                        {"fraction", scalar_json(s.fraction)},
                        {"median_floor", scalar_json(t.floors[i])},
                        {"meets_bound", s.meets_bound},
                        {"slack_bound", scalar_json(t.report.slack_bounds[i])},
                        {"meets_slack_bound", s.meets_slack_bound}});
  }
  out << "line " << to_string(t.line.normal()) << " . x = " << to_string(t.line.offset()) << "\n";
  return {Json{{"line", line_json(t.line)}, {"bound", scalar_json(t.report.bound)}, {"sets", sets}}, ok};
}

Outcome cmd_sweep(const Options& o, std::ostream& out) {
  const Dataset ds = load(o, "PATH", {.keyframes = 3});
  if (ds.kind != DatasetKind::Path) throw UsageError("sweep expects a PATH dataset");
  const MotionPath& path = *ds.path;
  const Scalar tau = o.tau.empty() ? slackened(make_scalar(2, 9), path.size()) : parse_exact(o.tau, "--tau");
  std::optional<Scalar> threshold;
  if (!o.threshold.empty()) threshold = parse_exact(o.threshold, "--threshold");
  const auto rep = continuity_demo(path, o.samples, tau, threshold, o.threads);
  Json records = Json::array();
  for (const auto& r : rep.records) {
    Json j{{"time", scalar_json(r.time)}, {"degenerate", r.degenerate}, {"jump", r.jump}};
    if (r.argmax) j["argmax"] = point_json(*r.argmax);
    if (!r.degenerate) j["count"] = r.count;
    if (r.witness) j["witness"] = Json{{"point", point_json(r.witness->point)}, {"count", r.witness->count}};
    records.push_back(j);
  }
  Json jumps = Json::array();
  for (const auto& e : rep.jumps) {
    jumps.push_back(Json{{"before", e.before}, {"after", e.after}, {"from", point_json(e.from)},
                         {"to", point_json(e.to)}, {"from_count", e.from_count}, {"to_count", e.to_count}});
  }
  out << rep.records.size() << " samples, " << rep.degenerate_samples << " degenerate, " << rep.jumps.size()
      << " argmax jumps, " << rep.missing_witnesses << " samples without a witness at tau " << to_string(tau) << "\n";
  if (!o.plot.empty()) {
    const auto svgs = sweep_svgs(path, rep, grid_or(o, 40));
    const std::string stem = o.plot.size() > 4 && o.plot.ends_with(".svg") ? o.plot.substr(0, o.plot.size() - 4) : o.plot;
    for (std::size_t j = 0; j + 1 < svgs.size(); ++j) {
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "-%03zu.svg", j);
      write_file(stem + suffix, svgs[j]);
    }
    write_file(stem + "-timeline.svg", svgs.back());
  }
  return {Json{{"tau", scalar_json(tau)},
               {"jump_threshold", scalar_json(rep.jump_threshold)},
               {"degenerate_samples", rep.degenerate_samples},
               {"missing_witnesses", rep.missing_witnesses},
               {"records", records},
               {"jumps", jumps}},
          rep.missing_witnesses == 0};
}

Outcome cmd_verify(const Options& o, std::ostream& out) {
  const BatteryConfig cfg{o.seed, o.trials, o.threads};
  Json report = run_battery(cfg);
  for (const auto& c : report["checks"]) {
    out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
  }
  const bool ok = report["passed"].get<bool>();
  return {std::move(report), ok};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simplicial and dual depth toolkit", "hcover"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input dataset (JSON)");
    sub->add_option("--out", o.out, "write the JSON report here");
    sub->add_option("--plot", o.plot, "write an SVG plot here");
    sub->add_option("--seed", o.seed, "seed for generated inputs");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    sub->add_option("--grid", o.grid, "plot resolution per side");
  };
  auto generated = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "size of a generated input");
    sub->add_option("--generator", o.generator, "POINTS, CONVEX, LINES, TANGENT, COLORED_POINTS or PATH");
  };

  std::map<std::string, Outcome (*)(const Options&, std::ostream&)> handlers{
      {"depth", cmd_depth},   {"maxdepth", cmd_maxdepth},       {"dual", cmd_dual},   {"maxdual", cmd_maxdual},
      {"expose", cmd_expose}, {"extremal", cmd_extremal},       {"transversal", cmd_transversal},
      {"sweep", cmd_sweep},   {"verify", cmd_verify}};
  std::map<std::string, CLI::App*> subs;
  subs["depth"] = app.add_subcommand("depth", "depth of a query point");
  subs["maxdepth"] = app.add_subcommand("maxdepth", "point of maximum planar depth");
  subs["dual"] = app.add_subcommand("dual", "dual depth of a query point");
  subs["maxdual"] = app.add_subcommand("maxdual", "maximum dual depth over the arrangement cells");
  subs["expose"] = app.add_subcommand("expose", "exposure profile and exposed direction arcs");
  subs["extremal"] = app.add_subcommand("extremal", "maximum dual depth of the tangent family");
  subs["transversal"] = app.add_subcommand("transversal", "line through the median intervals of two sets");
  subs["sweep"] = app.add_subcommand("sweep", "argmax tracking and heavy witnesses along a motion path");
  subs["verify"] = app.add_subcommand("verify", "run the verification battery");
  for (auto& [name, sub] : subs) common(sub);
  for (const char* name : {"depth", "maxdepth", "dual", "maxdual", "expose", "transversal", "sweep"}) {
    generated(subs[name]);
  }
  for (const char* name : {"depth", "dual", "expose"}) {
    subs[name]->add_option("--point", o.point, "query point, comma separated")->required();
  }
  subs["extremal"]->add_option("n", o.extremal_n, "family size")->required()->check(CLI::Range(3, 200));
  subs["sweep"]->add_option("--samples", o.samples, "samples along the path");
  subs["sweep"]->add_option("--tau", o.tau, "witness threshold as a rational");
  subs["sweep"]->add_option("--threshold", o.threshold, "argmax jump distance");
  subs["verify"]->add_option("--trials", o.trials, "trials per check (50 = acceptance sizes)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string name;
  for (auto& [n, sub] : subs) {
    if (sub->parsed()) name = n;
  }
  try {
    Outcome result = handlers.at(name)(o, out);
    Json report{{"command", name}, {"bound_ok", result.bound_ok}, {"result", result.report}};
    if (!o.out.empty()) write_file(o.out, report.dump(2) + "\n");
    return result.bound_ok ? kExitOk : kExitBoundFailed;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hcover
