#pragma once

#include <cstdint>
#include <vector>

#include "hcover/geometry.hpp"
#include "hcover/selection.hpp"

namespace hcover {

/// base + span(directions). Build through make_flat, which checks the rank.
struct AffineFlat {
  Point base;
  std::vector<Point> directions;

  std::size_t dim() const { return base.dim(); }
  std::size_t flat_dim() const { return directions.size(); }
};

AffineFlat make_flat(Point base, std::vector<Point> directions);

/// Orthogonal (not unit) rational basis of the complement of the direction
/// space, by Gram-Schmidt against the standard basis.
std::vector<Point> complement_basis(const AffineFlat& flat);

/// Coordinates of the orthogonal projections in complement_basis(flat).
PointSet project_to_complement(const PointSet& set, const AffineFlat& flat);

/// Where the whole flat lands under the same projection.
Point projected_flat_point(const AffineFlat& flat);

/// Whether the convex hull of d - m + 1 points meets the flat (closed).
bool tuple_touches_flat(std::span<const Point> tuple, const AffineFlat& flat);

struct TransversalSetReport {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  Scalar fraction;
  bool meets_bound = false;
  bool meets_slack_bound = false;
};

struct TransversalReport {
  std::size_t d = 0;
  std::size_t m = 0;
  Scalar bound;  // 2(d-m) / ((d-m+1)! (d-m+1))
  std::vector<Scalar> slack_bounds;
  std::vector<TransversalSetReport> sets;

  bool all_meet_bound() const;
  bool all_meet_slack_bound() const;
};

TransversalReport verify_transversal(const AffineFlat& flat, const std::vector<PointSet>& sets);

/// Pairs guaranteed by a line through the median intervals:
/// floor((n-1)/2) * ceil((n-1)/2) / C(n,2).
Scalar median_floor(std::size_t n);

struct TransversalLine {
  AffineFlat flat;
  Hyperplane line;
  TransversalReport report;
  std::vector<Scalar> floors;
};

/// A line meeting the median interval of both planar sets' projections onto
/// its normal. The normal sweeps the upper half circle; each stretch between
/// critical normals is searched exactly and the first feasible one is taken.
TransversalLine find_transversal_line_2d(const PointSet& p0, const PointSet& p1);

}  // namespace hcover
