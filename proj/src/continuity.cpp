#include "hcover/continuity.hpp"

#include <algorithm>
#include <random>

#include "hcover/parallel.hpp"

namespace hcover {

MotionPath make_motion_path(std::vector<Keyframe> keyframes) {
  if (keyframes.size() < 2) throw DomainError("a motion path needs at least two keyframes");
  if (keyframes.front().time != 0 || keyframes.back().time != 1) {
    throw DomainError("keyframe times must run from 0 to 1");
  }
  const std::size_t n = keyframes.front().set.size();
  if (n == 0) throw DomainError("keyframes must not be empty");
  const std::size_t d = keyframes.front().set.dim();
  for (std::size_t i = 0; i < keyframes.size(); ++i) {
    if (i > 0 && keyframes[i].time <= keyframes[i - 1].time) {
      throw DomainError("keyframe times must increase strictly");
    }
    if (keyframes[i].set.size() != n) throw DomainError("keyframes differ in cardinality");
    if (keyframes[i].set.dim() != d) throw DimensionError("keyframes differ in dimension");
  }
  return MotionPath{std::move(keyframes)};
}

PointSet point_set_at(const MotionPath& path, const Scalar& t) {
  const auto& kf = path.keyframes;
  if (t < 0 || t > 1) throw DomainError("path time outside [0, 1]");
  std::size_t seg = 0;
  while (seg + 2 < kf.size() && kf[seg + 1].time <= t) ++seg;
  const auto& a = kf[seg];
  const auto& b = kf[seg + 1];
  const Scalar s = (t - a.time) / (b.time - a.time);
  PointSet out;
  out.colors = a.set.colors;
  out.provenance = a.set.provenance;
  for (std::size_t i = 0; i < a.set.size(); ++i) {
    out.points.push_back(a.set.points[i] + s * (b.set.points[i] - a.set.points[i]));
  }
  return out;
}

std::vector<PointSet> sample_path(const MotionPath& path, std::size_t k) {
  if (k < 2) throw DomainError("sample_path needs k >= 2");
  std::vector<PointSet> out;
  for (std::size_t j = 0; j < k; ++j) {
    out.push_back(point_set_at(path, make_scalar(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k - 1))));
  }
  return out;
}

std::optional<HeavyWitness> heavy_region_witness(const PointSet& set, const Scalar& tau) {
  if (set.dim() != 2) throw DimensionError("heavy_region_witness is planar");
  if (set.size() < 3) throw DomainError("heavy_region_witness needs at least 3 points");
  if (auto v = general_position_report(set.points); !v.empty()) {
    throw DegeneracyError("point set is not in general position", violation_indices(v));
  }
  const Scalar need = tau * Scalar(static_cast<long>(binom(static_cast<std::int64_t>(set.size()), 3)));
  for (const auto& c : candidate_vertices(set).points) {
    const auto count = planar_depth_count(c, set.points);
    if (Scalar(static_cast<unsigned long>(count)) >= need) return HeavyWitness{c, count};
  }
  return std::nullopt;
}

namespace {

Scalar max_squared_displacement(const PointSet& a, const PointSet& b) {
  Scalar best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, squared_norm(b.points[i] - a.points[i]));
  return best;
}

struct Sample {
  bool degenerate = true;
  std::optional<Point> argmax;
  std::uint64_t count = 0;
  std::optional<HeavyWitness> witness;
};

std::vector<SweepRecord> track(const MotionPath& path, std::size_t k, const Scalar& threshold,
                               const std::optional<Scalar>& tau, unsigned threads) {
  if (sgn(threshold) <= 0) throw DomainError("jump threshold must be positive");
  const auto frames = sample_path(path, k);
  const auto samples = parallel_map(frames.size(), threads, [&](std::size_t j) {
    Sample s;
    if (!general_position_report(frames[j].points).empty()) return s;
    auto best = max_depth_point(frames[j]);
    s.degenerate = false;
    s.argmax = best.point;
    s.count = best.report.count;
    if (tau) s.witness = heavy_region_witness(frames[j], *tau);
    return s;
  });
  const Scalar limit = threshold * threshold;
  std::vector<SweepRecord> out;
  std::optional<std::size_t> previous;
  for (std::size_t j = 0; j < frames.size(); ++j) {
    SweepRecord r;
    r.time = make_scalar(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k - 1));
    r.degenerate = samples[j].degenerate;
    r.argmax = samples[j].argmax;
    r.count = samples[j].count;
    r.witness = samples[j].witness;
    if (!r.degenerate) {
      if (previous) {
        const auto& before = out[*previous];
        r.jump = squared_norm(*r.argmax - *before.argmax) > limit &&
                 max_squared_displacement(frames[*previous], frames[j]) < limit;
      }
      previous = j;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<SweepRecord> track_argmax(const MotionPath& path, std::size_t k,
                                      const Scalar& jump_threshold, unsigned threads) {
  return track(path, k, jump_threshold, std::nullopt, threads);
}

MotionPath orbit_path(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto jitter = [&] { return make_scalar(static_cast<std::int64_t>(rng() % 9) - 4, 7); };
  std::vector<Point> square;
  for (auto [x, y] : {std::pair{-5, -5}, {5, -5}, {5, 5}, {-5, 5}}) {
    square.push_back(Point{x + jitter(), y + jitter()});
  }
  const std::pair<int, int> octagon[] = {{12, 0}, {9, 9}, {0, 12}, {-9, 9}, {-12, 0}, {-9, -9}, {0, -12}, {9, -9}};
  std::vector<Keyframe> frames;
  for (std::size_t i = 0; i <= 8; ++i) {
    const auto [x, y] = octagon[i % 8];
    Point mover = i == 8 ? frames.front().set.points.back() : Point{x + jitter(), y + jitter()};
    auto pts = square;
    pts.push_back(std::move(mover));
    frames.push_back(Keyframe{make_scalar(static_cast<std::int64_t>(i), 8), make_point_set(std::move(pts), "orbit")});
  }
  return make_motion_path(std::move(frames));
}

Scalar default_jump_threshold(const MotionPath& path) {
  const auto& pts = path.keyframes.front().set.points;
  Scalar extent = 0;
  for (std::size_t c = 0; c < pts.front().dim(); ++c) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                        [c](const Point& a, const Point& b) { return a[c] < b[c]; });
    extent = std::max(extent, Scalar((*hi)[c] - (*lo)[c]));
  }
  if (sgn(extent) == 0) return 1;
  return extent / 10;
}

ContinuityReport continuity_demo(const MotionPath& path, std::size_t k, const Scalar& tau,
                                 std::optional<Scalar> jump_threshold, unsigned threads) {
  ContinuityReport report;
  report.tau = tau;
  report.jump_threshold = jump_threshold ? *jump_threshold : default_jump_threshold(path);
  report.records = track(path, k, report.jump_threshold, tau, threads);
  const Scalar total(static_cast<unsigned long>(binom(static_cast<std::int64_t>(path.size()), 3)));
  std::optional<std::size_t> previous;
  for (std::size_t j = 0; j < report.records.size(); ++j) {
    const auto& r = report.records[j];
    if (r.degenerate) {
      ++report.degenerate_samples;
      continue;
    }
    if (!r.witness) {
      // The witness scan and the maximum scan cover the same candidates.
      if (tau * total <= Scalar(static_cast<unsigned long>(r.count))) {
        throw InternalError("no heavy witness although the maximum reaches tau");
      }
      ++report.missing_witnesses;
    }
    if (r.jump) {
      const auto& b = report.records[*previous];
      report.jumps.push_back(JumpEvent{*previous, j, *b.argmax, *r.argmax, b.count, r.count});
    }
    previous = j;
  }
  return report;
}

}  // namespace hcover
