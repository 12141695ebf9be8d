#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcover/selection.hpp"

namespace hcover {

struct Keyframe {
  Scalar time;
  PointSet set;
};

/// Point sets keyframed over [0, 1], each point moving linearly between
/// consecutive keyframes.
struct MotionPath {
  std::vector<Keyframe> keyframes;

  std::size_t size() const { return keyframes.front().set.size(); }
  std::size_t dim() const { return keyframes.front().set.dim(); }
};

/// Checks times (strictly increasing, from 0 to 1) and that every frame has
/// the same cardinality and dimension.
MotionPath make_motion_path(std::vector<Keyframe> keyframes);

PointSet point_set_at(const MotionPath& path, const Scalar& t);

/// Frames at t = j/(k-1), j = 0..k-1.
std::vector<PointSet> sample_path(const MotionPath& path, std::size_t k);

struct HeavyWitness {
  Point point;
  std::uint64_t count = 0;
};

/// Lexicographically least candidate vertex with depth >= tau * C(n,3).
std::optional<HeavyWitness> heavy_region_witness(const PointSet& set, const Scalar& tau);

struct SweepRecord {
  Scalar time;
  bool degenerate = false;
  std::optional<Point> argmax;
  std::uint64_t count = 0;
  std::optional<HeavyWitness> witness;
  bool jump = false;
};

/// Per-sample maximum depth point. A sample is flagged as a jump when its
/// argmax lies farther than `jump_threshold` from the previous usable
/// sample's while no data point moved that far. Frames not in general
/// position are marked degenerate and skipped.
std::vector<SweepRecord> track_argmax(const MotionPath& path, std::size_t k,
                                      const Scalar& jump_threshold, unsigned threads = 1);

struct JumpEvent {
  std::size_t before = 0;  // sample indices
  std::size_t after = 0;
  Point from;
  Point to;
  std::uint64_t from_count = 0;
  std::uint64_t to_count = 0;
};

struct ContinuityReport {
  Scalar tau;
  Scalar jump_threshold;
  std::vector<SweepRecord> records;
  std::vector<JumpEvent> jumps;
  std::size_t degenerate_samples = 0;
  /// Usable samples without a witness; only possible when tau exceeds the
  /// sample's maximum depth fraction.
  std::size_t missing_witnesses = 0;
};

/// Five points: four jittered around a square of side 10 and a fifth that
/// circles them once along a jittered octagon of radius about 12.
MotionPath orbit_path(std::uint64_t seed);

/// Found by scanning seeds from 0 for a k = 101 sweep with a flagged jump;
/// the first seed already has five.
inline constexpr std::uint64_t kOrbitJumpSeed = 0;

/// A tenth of the widest coordinate extent of the first keyframe.
Scalar default_jump_threshold(const MotionPath& path);

ContinuityReport continuity_demo(const MotionPath& path, std::size_t k, const Scalar& tau,
                                 std::optional<Scalar> jump_threshold = std::nullopt,
                                 unsigned threads = 1);

}  // namespace hcover
