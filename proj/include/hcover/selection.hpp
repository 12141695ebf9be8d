#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcover/combinatorics.hpp"
#include "hcover/geometry.hpp"

namespace hcover {

/// A finite point set in R^d with optional color labels.
struct PointSet {
  std::vector<Point> points;
  std::optional<std::vector<int>> colors;
  std::string provenance;

  std::size_t size() const { return points.size(); }
  /// Dimension of the points; throws DimensionError on a mixed set.
  std::size_t dim() const;
};

PointSet make_point_set(std::vector<Point> points, std::string provenance = {});

enum class BoundVariant { Gromov, Barany };

/// 2d/((d+1)!(d+1)) for Gromov, 1/(d+1)^d for Barany.
Scalar selection_bound(int d, BoundVariant variant = BoundVariant::Gromov);

/// Additive slack applied to every bound check: constant/n with n the
/// number of points (or lines). Frozen after exhaustive calibration at n <= 12.
inline constexpr int kSlackConstant = 3;
Scalar slackened(const Scalar& bound, std::size_t n);

struct DepthReport {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  Scalar fraction;
  Scalar bound;
  bool meets_bound = false;
  Scalar slack_bound;
  bool meets_slack_bound = false;
  /// Counted tuples whose closed hull has the query on its boundary. Only
  /// filled by the enumerating routines.
  std::uint64_t boundary_count = 0;
  std::vector<std::vector<std::size_t>> witnesses;
  /// Set when a fast routine handed off to exhaustive enumeration.
  bool used_fallback = false;
};

/// Fills fraction and both bound comparisons. `n` sizes the slack term.
DepthReport make_report(std::uint64_t count, std::uint64_t total, const Scalar& bound,
                        std::size_t n);

inline constexpr std::size_t kDefaultWitnesses = 8;

/// Counts (d+1)-subsets whose closed simplex contains q, in any dimension.
DepthReport depth_naive(const Point& q, const PointSet& set,
                        std::size_t max_witnesses = kDefaultWitnesses);

/// Planar closed simplicial depth by angular sweep around q, in
/// O(n log n). Throws DegeneracyError when q coincides with a data point.
DepthReport depth_planar_sweep(const Point& q, const PointSet& set);

/// Planar closed depth with no preconditions beyond d = 2: data points
/// equal to q are allowed and contribute every triangle they belong to.
std::uint64_t planar_depth_count(const Point& q, std::span<const Point> points);

/// Rainbow simplices (one vertex per color class) containing q.
DepthReport colorful_depth(const Point& q, const PointSet& set,
                           std::size_t max_witnesses = kDefaultWitnesses);

enum class CandidateSource { DataPoint, PairIntersection };

struct CandidateSet {
  std::vector<Point> points;  // sorted lexicographically, deduplicated
  std::vector<CandidateSource> sources;
};

/// Data points plus every crossing of two lines spanned by point pairs.
CandidateSet candidate_vertices(const PointSet& set);

struct MaxDepthResult {
  Point point;
  DepthReport report;
};

/// Global maximum of planar closed simplicial depth. Ties go to the
/// lexicographically least point.
MaxDepthResult max_depth_point(const PointSet& set, unsigned threads = 1);

}  // namespace hcover
