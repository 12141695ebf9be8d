#include "hcover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace hcover {

namespace {

constexpr double kSize = 600;
const char* const kBands[] = {"#f7fbff", "#c6dbef", "#6baed6", "#2171b5", "#08306b"};

struct Box {
  Scalar x0, y0, x1, y1;
};

Box bounding_box(const std::vector<Point>& pts) {
  if (pts.empty()) return {-1, -1, 1, 1};
  Box b{pts[0][0], pts[0][1], pts[0][0], pts[0][1]};
  for (const auto& p : pts) {
    b.x0 = std::min(b.x0, p[0]);
    b.x1 = std::max(b.x1, p[0]);
    b.y0 = std::min(b.y0, p[1]);
    b.y1 = std::max(b.y1, p[1]);
  }
  // Square it up and leave a margin of a tenth on each side.
  Scalar side = std::max(Scalar(b.x1 - b.x0), Scalar(b.y1 - b.y0));
  if (sgn(side) == 0) side = 2;
  const Scalar cx = (b.x0 + b.x1) / 2, cy = (b.y0 + b.y1) / 2;
  const Scalar half = side * Scalar(6, 10);
  return {cx - half, cy - half, cx + half, cy + half};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(Box box) : box_(std::move(box)) {}

  double sx(const Scalar& x) const { return Scalar((x - box_.x0) / (box_.x1 - box_.x0)).get_d() * kSize; }
  double sy(const Scalar& y) const { return (1 - Scalar((y - box_.y0) / (box_.y1 - box_.y0)).get_d()) * kSize; }

  void landscape(std::size_t grid, const std::function<int(const Point&)>& band) {
    const Scalar w = (box_.x1 - box_.x0) / Scalar(static_cast<unsigned long>(grid));
    const Scalar h = (box_.y1 - box_.y0) / Scalar(static_cast<unsigned long>(grid));
    const double cw = kSize / static_cast<double>(grid);
    body_ += "<g shape-rendering=\"crispEdges\">\n";
    for (std::size_t j = 0; j < grid; ++j) {
      for (std::size_t i = 0; i < grid; ++i) {
        const Point centre{box_.x0 + w * (static_cast<unsigned long>(i) + Scalar(1, 2)),
                           box_.y0 + h * (static_cast<unsigned long>(j) + Scalar(1, 2))};
        const int b = band(centre);
        if (b == 0) continue;
        body_ += "<rect x=\"" + num(static_cast<double>(i) * cw) + "\" y=\"" +
                 num(kSize - static_cast<double>(j + 1) * cw) + "\" width=\"" + num(cw) + "\" height=\"" + num(cw) +
                 "\" fill=\"" + kBands[b] + "\"/>\n";
      }
    }
    body_ += "</g>\n";
  }

  void dot(const Point& p, const char* fill) {
    body_ += "<circle class=\"point\" cx=\"" + num(sx(p[0])) + "\" cy=\"" + num(sy(p[1])) + "\" r=\"4\" fill=\"" +
             fill + "\"/>\n";
  }

  void marker(const Point& p) {
    const double x = sx(p[0]), y = sy(p[1]);
    body_ += "<path class=\"argmax\" d=\"M" + num(x - 7) + " " + num(y - 7) + " L" + num(x + 7) + " " + num(y + 7) +
             " M" + num(x - 7) + " " + num(y + 7) + " L" + num(x + 7) + " " + num(y - 7) +
             "\" stroke=\"#d7301f\" stroke-width=\"3\"/>\n";
  }

  // Clip the line to the box by intersecting with its four sides.
  void line(const Hyperplane& l) {
    std::vector<Point> hits;
    const Hyperplane sides[] = {make_line(1, 0, box_.x0), make_line(1, 0, box_.x1), make_line(0, 1, box_.y0),
                                make_line(0, 1, box_.y1)};
    for (const auto& s : sides) {
      auto x = intersect(l, s);
      if (x && (*x)[0] >= box_.x0 && (*x)[0] <= box_.x1 && (*x)[1] >= box_.y0 && (*x)[1] <= box_.y1) {
        hits.push_back(*x);
      }
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() < 2) return;
    body_ += "<line class=\"line\" x1=\"" + num(sx(hits.front()[0])) + "\" y1=\"" + num(sy(hits.front()[1])) +
             "\" x2=\"" + num(sx(hits.back()[0])) + "\" y2=\"" + num(sy(hits.back()[1])) +
             "\" stroke=\"#252525\" stroke-width=\"1.5\"/>\n";
  }

  std::string finish() const {
    const std::string s = num(kSize);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s +
           " " + s + "\">\n<rect width=\"" + s + "\" height=\"" + s + "\" fill=\"white\"/>\n" + body_ + "</svg>\n";
  }

 private:
  Box box_;
  std::string body_;
};

// Fraction bands: 0, (0, 1/9), [1/9, 2/9), [2/9, 1/3), [1/3, 1].
int band_of(std::uint64_t count, std::uint64_t total) {
  if (count == 0) return 0;
  const Scalar f = Scalar(static_cast<unsigned long>(count)) / Scalar(static_cast<unsigned long>(total));
  if (f < Scalar(1, 9)) return 1;
  if (f < Scalar(2, 9)) return 2;
  if (f < Scalar(1, 3)) return 3;
  return 4;
}

void require_planar(std::size_t d) {
  if (d != 2) throw UnsupportedError("plots are planar only");
}

void require_grid(std::size_t grid) {
  if (grid == 0) throw DomainError("plot grid must be positive");
}

}  // namespace

std::string depth_svg(const PointSet& set, const std::optional<Point>& argmax, std::size_t grid) {
  require_planar(set.dim());
  require_grid(grid);
  std::vector<Point> extent = set.points;
  if (argmax) extent.push_back(*argmax);
  Canvas c(bounding_box(extent));
  const auto total = binom(static_cast<std::int64_t>(set.size()), 3);
  if (total > 0) {
    c.landscape(grid, [&](const Point& q) { return band_of(planar_depth_count(q, set.points), total); });
  }
  for (const auto& p : set.points) c.dot(p, "#000000");
  if (argmax) c.marker(*argmax);
  return c.finish();
}

std::string dual_svg(const LineFamily& family, const std::optional<Point>& marker, std::size_t grid) {
  require_grid(grid);
  for (const auto& l : family.lines) require_planar(l.normal().dim());
  std::vector<Point> extent;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (auto x = intersect(family.lines[i], family.lines[j])) extent.push_back(*x);
    }
  }
  if (marker) extent.push_back(*marker);
  Canvas c(bounding_box(extent));
  if (family.size() >= 3) {
    const auto total = binom(static_cast<std::int64_t>(family.size()), 3);
    c.landscape(grid, [&](const Point& q) { return band_of(dual_depth_fast(q, family).count, total); });
  }
  for (const auto& l : family.lines) c.line(l);
  if (marker) c.marker(*marker);
  return c.finish();
}

std::vector<std::string> sweep_svgs(const MotionPath& path, const ContinuityReport& report, std::size_t grid) {
  require_planar(path.dim());
  const auto frames = sample_path(path, report.records.size());
  std::vector<std::string> out;
  for (std::size_t j = 0; j < frames.size(); ++j) out.push_back(depth_svg(frames[j], report.records[j].argmax, grid));

  std::uint64_t top = 1;
  for (const auto& r : report.records) top = std::max(top, r.count);
  const double w = kSize / static_cast<double>(frames.size());
  std::string strip = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) +
                      "\" height=\"120.00\" viewBox=\"0 0 " + num(kSize) + " 120.00\">\n" +
                      "<rect width=\"" + num(kSize) + "\" height=\"120.00\" fill=\"white\"/>\n";
  for (std::size_t j = 0; j < report.records.size(); ++j) {
    const auto& r = report.records[j];
    const double x = static_cast<double>(j) * w;
    if (r.degenerate) {
      strip += "<rect class=\"degenerate\" x=\"" + num(x) + "\" y=\"0.00\" width=\"" + num(w) +
               "\" height=\"100.00\" fill=\"#bdbdbd\"/>\n";
      continue;
    }
    const double h = 100.0 * static_cast<double>(r.count) / static_cast<double>(top);
    strip += "<rect class=\"sample\" x=\"" + num(x) + "\" y=\"" + num(100 - h) + "\" width=\"" + num(w) +
             "\" height=\"" + num(h) + "\" fill=\"#2171b5\"/>\n";
    if (r.jump) {
      strip += "<rect class=\"jump\" x=\"" + num(x) + "\" y=\"104.00\" width=\"" + num(w) +
               "\" height=\"12.00\" fill=\"#d7301f\"/>\n";
    }
  }
  strip += "</svg>\n";
  out.push_back(std::move(strip));
  return out;
}

}  // namespace hcover
