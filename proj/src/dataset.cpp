#include "hcover/dataset.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace hcover {

const char* to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Points: return "POINTS";
    case DatasetKind::Lines: return "LINES";
    case DatasetKind::ColoredPoints: return "COLORED_POINTS";
    case DatasetKind::Path: return "PATH";
  }
  return "?";
}

namespace {

bool same_points(const PointSet& a, const PointSet& b) { return a.points == b.points && a.colors == b.colors; }

}  // namespace

bool operator==(const Dataset& a, const Dataset& b) {
  if (a.kind != b.kind || !(a.meta == b.meta)) return false;
  if (!same_points(a.points, b.points) || a.lines.lines != b.lines.lines) return false;
  if (a.path.has_value() != b.path.has_value()) return false;
  if (!a.path) return true;
  const auto &ka = a.path->keyframes, &kb = b.path->keyframes;
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i].time != kb[i].time || !same_points(ka[i].set, kb[i].set)) return false;
  }
  return true;
}

namespace {

// Builds a DOM in which every non-integer number keeps its source text as a
// string, so decimals convert exactly and exponents can be refused later.
class ExactSax {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  bool null() { return put(nullptr); }
  bool boolean(bool v) { return put(v); }
  bool number_integer(number_integer_t v) { return put(v); }
  bool number_unsigned(number_unsigned_t v) { return put(v); }
  bool number_float(number_float_t, const string_t& text) { return put(text); }
  bool string(string_t& v) { return put(v); }
  bool binary(binary_t& v) { return put(Json::binary(v)); }
  bool start_object(std::size_t) {
    stack_.push_back(place(Json::object()));
    return true;
  }
  bool key(string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(place(Json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    throw ParseError("byte " + std::to_string(position), ex.what());
  }

  Json root;

 private:
  template <typename T>
  bool put(T&& v) {
    place(Json(std::forward<T>(v)));
    return true;
  }

  Json* place(Json v) {
    if (stack_.empty()) {
      root = std::move(v);
      return &root;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    top[key_] = std::move(v);
    return &top[key_];
  }

  std::vector<Json*> stack_;
  std::string key_;
};

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& at, const std::string& key) {
  if (!obj.is_object()) throw ParseError(at.empty() ? "/" : at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(at.empty() ? "/" : at, "missing field \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& v, const std::string& at) {
  if (!v.is_array()) throw ParseError(at, "expected an array");
  return v;
}

Scalar read_scalar(const Json& v, const std::string& at) {
  std::string text;
  if (v.is_number_integer()) {
    text = v.dump();
  } else if (v.is_string()) {
    text = v.get<std::string>();
  } else {
    throw ParseError(at, "expected a number or a rational string");
  }
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(at, "not an exact number: " + text);
  }
}

Point read_point(const Json& v, const std::string& at) {
  std::vector<Scalar> c;
  const auto& arr = array_at(v, at);
  if (arr.empty()) throw ParseError(at, "point has no coordinates");
  for (std::size_t i = 0; i < arr.size(); ++i) c.push_back(read_scalar(arr[i], child(at, i)));
  return Point(std::move(c));
}

PointSet read_points(const Json& v, const std::string& at) {
  PointSet s;
  const auto& arr = array_at(v, at);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    s.points.push_back(read_point(arr[i], child(at, i)));
    if (s.points.back().dim() != s.points.front().dim()) {
      throw ParseError(child(at, i), "mixed point dimensions");
    }
  }
  return s;
}

DatasetMeta read_meta(const Json& obj) {
  DatasetMeta m;
  auto it = obj.find("metadata");
  if (it == obj.end()) return m;
  const std::string at = "/metadata";
  if (!it->is_object()) throw ParseError(at, "expected an object");
  if (auto s = it->find("seed"); s != it->end()) {
    if (!s->is_number_unsigned()) throw ParseError(child(at, "seed"), "seed must be a non-negative integer");
    m.seed = s->get<std::uint64_t>();
  }
  if (auto g = it->find("generator"); g != it->end()) {
    if (!g->is_string()) throw ParseError(child(at, "generator"), "expected a string");
    m.generator = g->get<std::string>();
  }
  if (auto p = it->find("params"); p != it->end()) {
    if (!p->is_object()) throw ParseError(child(at, "params"), "expected an object");
    for (const auto& [k, v] : p->items()) {
      if (!v.is_string()) throw ParseError(child(child(at, "params"), k), "expected a string");
      m.params[k] = v.get<std::string>();
    }
  }
  return m;
}

}  // namespace

Dataset parse_dataset(std::string_view text) {
  ExactSax sax;
  Json::sax_parse(text.begin(), text.end(), &sax);
  const Json& doc = sax.root;
  const Json& kind_v = field(doc, "", "kind");
  if (!kind_v.is_string()) throw ParseError("/kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();

  Dataset ds;
  ds.meta = read_meta(doc);
  if (kind == "POINTS" || kind == "COLORED_POINTS") {
    ds.kind = kind == "POINTS" ? DatasetKind::Points : DatasetKind::ColoredPoints;
    ds.points = read_points(field(doc, "", "points"), "/points");
    if (ds.kind == DatasetKind::ColoredPoints) {
      const auto& colors = array_at(field(doc, "", "colors"), "/colors");
      if (colors.size() != ds.points.size()) throw ParseError("/colors", "one color per point expected");
      std::vector<int> c;
      for (std::size_t i = 0; i < colors.size(); ++i) {
        if (!colors[i].is_number_integer() || colors[i].get<std::int64_t>() < 0) {
          throw ParseError(child("/colors", i), "color must be a non-negative integer");
        }
        c.push_back(colors[i].get<int>());
      }
      ds.points.colors = std::move(c);
    }
  } else if (kind == "LINES") {
    ds.kind = DatasetKind::Lines;
    const auto& arr = array_at(field(doc, "", "lines"), "/lines");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = child("/lines", i);
      Point normal = read_point(field(arr[i], at, "normal"), child(at, "normal"));
      if (normal.dim() != 2) throw ParseError(child(at, "normal"), "lines must be planar");
      Scalar offset = read_scalar(field(arr[i], at, "offset"), child(at, "offset"));
      try {
        ds.lines.lines.emplace_back(std::move(normal), std::move(offset));
      } catch (const DomainError& e) {
        throw ParseError(at, e.what());
      }
    }
  } else if (kind == "PATH") {
    ds.kind = DatasetKind::Path;
    const auto& arr = array_at(field(doc, "", "keyframes"), "/keyframes");
    std::vector<Keyframe> frames;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = child("/keyframes", i);
      frames.push_back(Keyframe{read_scalar(field(arr[i], at, "time"), child(at, "time")),
                                read_points(field(arr[i], at, "points"), child(at, "points"))});
    }
    try {
      ds.path = make_motion_path(std::move(frames));
    } catch (const Error& e) {
      throw ParseError("/keyframes", e.what());
    }
  } else {
    throw ParseError("/kind", "unknown dataset kind \"" + kind + "\"");
  }
  return ds;
}

Json scalar_json(const Scalar& s) { return to_string(s); }

Json point_json(const Point& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(scalar_json(p[i]));
  return out;
}

Json line_json(const Hyperplane& line) {
  return Json{{"normal", point_json(line.normal())}, {"offset", scalar_json(line.offset())}};
}

Json depth_report_json(const DepthReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(w);
  return Json{{"count", r.count},
              {"total", r.total},
              {"fraction", scalar_json(r.fraction)},
              {"bound", scalar_json(r.bound)},
              {"meets_bound", r.meets_bound},
              {"slack_bound", scalar_json(r.slack_bound)},
              {"meets_slack_bound", r.meets_slack_bound},
              {"boundary_count", r.boundary_count},
              {"witnesses", witnesses},
              {"used_fallback", r.used_fallback}};
}

namespace {

Json points_json(const PointSet& s) {
  Json out = Json::array();
  for (const auto& p : s.points) out.push_back(point_json(p));
  return out;
}

}  // namespace

Json dataset_to_json(const Dataset& ds) {
  Json out{{"kind", to_string(ds.kind)}};
  switch (ds.kind) {
    case DatasetKind::Points:
      out["points"] = points_json(ds.points);
      break;
    case DatasetKind::ColoredPoints:
      out["points"] = points_json(ds.points);
      out["colors"] = ds.points.colors ? Json(*ds.points.colors) : Json::array();
      break;
    case DatasetKind::Lines: {
      Json lines = Json::array();
      for (const auto& l : ds.lines.lines) lines.push_back(line_json(l));
      out["lines"] = lines;
      break;
    }
    case DatasetKind::Path: {
      Json frames = Json::array();
      for (const auto& k : ds.path->keyframes) {
        frames.push_back(Json{{"time", scalar_json(k.time)}, {"points", points_json(k.set)}});
      }
      out["keyframes"] = frames;
      break;
    }
  }
  Json meta = Json::object();
  if (ds.meta.seed) meta["seed"] = *ds.meta.seed;
  if (!ds.meta.generator.empty()) meta["generator"] = ds.meta.generator;
  if (!ds.meta.params.empty()) meta["params"] = ds.meta.params;
  if (!meta.empty()) out["metadata"] = meta;
  return out;
}

std::string emit_dataset(const Dataset& ds) { return dataset_to_json(ds).dump(2) + "\n"; }

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::int64_t range) : rng_(seed), range_(range) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Integer grid coordinate plus a jitter in (-1/2, 1/2) with denominator 97.
  Scalar coordinate() { return Scalar(uniform(-range_, range_)) + make_scalar(uniform(-48, 48), 97); }

  Point point() { return Point{coordinate(), coordinate()}; }

  // Near the circle of radius `range`, through the rational parametrization.
  Point convex_point() {
    const Scalar s = make_scalar(uniform(-1000, 1000), 1000);
    const Scalar den = 1 + s * s;
    const Scalar r(range_);
    return Point{r * (1 - s * s) / den + make_scalar(uniform(-48, 48), 97 * 10),
                 r * 2 * s / den + make_scalar(uniform(-48, 48), 97 * 10)};
  }

  Hyperplane line() {
    const Point anchor = point();
    while (true) {
      const Point dir{make_scalar(uniform(-40, 40), 8), make_scalar(uniform(-40, 40), 8)};
      if (!dir.is_zero()) return line_through(anchor, anchor + dir);
    }
  }

 private:
  std::mt19937_64 rng_;
  std::int64_t range_;
};

template <typename Make>
auto retry(std::size_t budget, const char* what, Make make) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    if (auto v = make()) return std::move(*v);
  }
  throw GenerationError(std::string("no ") + what + " in general position within the retry budget");
}

std::optional<PointSet> gp_points(Sampler& s, std::size_t n, bool convex) {
  PointSet set;
  for (std::size_t i = 0; i < n; ++i) set.points.push_back(convex ? s.convex_point() : s.point());
  if (!general_position_report(set.points).empty()) return std::nullopt;
  return set;
}

}  // namespace

Dataset generate(std::string_view kind, std::size_t n, std::uint64_t seed, const GenerateOptions& options) {
  if (n < 1) throw DomainError("generate needs n >= 1");
  if (options.range < 1) throw DomainError("generate needs a positive range");
  Sampler s(seed, options.range);
  Dataset ds;
  ds.meta.seed = seed;
  ds.meta.generator = std::string(kind);
  ds.meta.params["n"] = std::to_string(n);
  ds.meta.params["range"] = std::to_string(options.range);

  if (kind == "POINTS" || kind == "CONVEX" || kind == "COLORED_POINTS") {
    ds.kind = kind == "COLORED_POINTS" ? DatasetKind::ColoredPoints : DatasetKind::Points;
    ds.points = retry(options.max_retries, "point set", [&] { return gp_points(s, n, kind == "CONVEX"); });
    if (ds.kind == DatasetKind::ColoredPoints) {
      std::vector<int> colors(n);
      for (std::size_t i = 0; i < n; ++i) colors[i] = static_cast<int>(i % 3);
      ds.points.colors = std::move(colors);
    }
    ds.points.provenance = std::string(kind) + " seed " + std::to_string(seed);
  } else if (kind == "LINES") {
    ds.kind = DatasetKind::Lines;
    ds.lines = retry(options.max_retries, "line family", [&]() -> std::optional<LineFamily> {
      LineFamily f;
      for (std::size_t i = 0; i < n; ++i) f.lines.push_back(s.line());
      if (!lines_general_position_report(f.lines).empty()) return std::nullopt;
      return f;
    });
    ds.lines.provenance = "LINES seed " + std::to_string(seed);
  } else if (kind == "TANGENT") {
    ds.kind = DatasetKind::Lines;
    ds.lines = tangent_family(n);
    ds.meta.params.erase("range");
  } else if (kind == "PATH") {
    if (options.keyframes < 2) throw DomainError("a path needs at least two keyframes");
    ds.kind = DatasetKind::Path;
    ds.meta.params["keyframes"] = std::to_string(options.keyframes);
    std::vector<Keyframe> frames;
    const auto last = static_cast<std::int64_t>(options.keyframes - 1);
    for (std::size_t i = 0; i < options.keyframes; ++i) {
      frames.push_back(Keyframe{make_scalar(static_cast<std::int64_t>(i), last),
                                retry(options.max_retries, "keyframe", [&] { return gp_points(s, n, false); })});
    }
    ds.path = make_motion_path(std::move(frames));
  } else {
    throw DomainError("unknown generator \"" + std::string(kind) + "\"");
  }
  return ds;
}

}  // namespace hcover
