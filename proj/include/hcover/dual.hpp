#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcover/angular.hpp"
#include "hcover/geometry.hpp"
#include "hcover/selection.hpp"

namespace hcover {

struct LineFamily {
  std::vector<Hyperplane> lines;
  std::string provenance;

  std::size_t size() const { return lines.size(); }
};

LineFamily make_line_family(std::vector<Hyperplane> lines, std::string provenance = {});

/// Closed containment of q in the bounded cell of three planar lines.
/// A parallel pair leaves no bounded cell and yields Outside.
Containment surround_containment(const Point& q, const Hyperplane& a, const Hyperplane& b,
                                 const Hyperplane& c);

bool surround_direct(const Point& q, const Hyperplane& a, const Hyperplane& b, const Hyperplane& c);

/// The same predicate through the triangle of q's projections onto the three
/// lines. Requires q off the lines and no parallel pair.
bool surround_projection(const Point& q, const Hyperplane& a, const Hyperplane& b,
                         const Hyperplane& c);

/// Triples of lines whose closed bounded cell contains q, against 2/9.
DepthReport dual_depth_naive(const Point& q, const LineFamily& family,
                             std::size_t max_witnesses = kDefaultWitnesses);

/// Dual depth as the planar simplicial depth of q among its projections.
/// Falls back to enumeration (and says so) when q is on a line or two lines
/// are parallel.
DepthReport dual_depth_fast(const Point& q, const LineFamily& family);

/// A point strictly inside one arrangement cell, next to the vertex `anchor`
/// where lines `first` and `second` cross.
struct CellSample {
  Point point;
  Point anchor;
  std::size_t first;
  std::size_t second;
};

/// One sample per (vertex, quadrant) of the arrangement. Every cell of an
/// arrangement in general position has a vertex, so every cell is hit.
/// Sorted by anchor, then point.
std::vector<CellSample> cell_samples(const LineFamily& family);

struct MaxDualResult {
  Point point;   // inside the maximizing cell, on no line
  Point anchor;  // arrangement vertex on that cell's boundary
  DepthReport report;
  std::uint64_t closed_count_at_anchor = 0;
};

/// Maximum dual depth over the open cells of the arrangement, i.e. of the
/// strict surround count. Ties go to the lexicographically least anchor,
/// then point.
MaxDualResult max_dual_depth_point(const LineFamily& family, unsigned threads = 1);

/// Pairs {j, k} (both != i) cutting from the half-plane beyond q, away from
/// line i, a triangle with q on its base.
std::uint64_t base_cut_count(const Point& q, std::size_t i, const LineFamily& family);

/// Crossing counts of projection segments against rays from q, as a function
/// of the ray direction.
struct ExposureProfile {
  Point query;
  std::vector<Point> projections;  // by line index
  /// Directions q(l) - q sorted counterclockwise from +x; `order[k]` is the
  /// line owning critical direction k.
  std::vector<Direction> critical;
  std::vector<std::size_t> order;
  /// arc_counts[k]: pairs crossing any ray strictly between critical k and
  /// critical k+1 (cyclically).
  std::vector<std::uint64_t> arc_counts;
  /// endpoint_counts[k]: pairs crossing the ray along critical k itself.
  std::vector<std::uint64_t> endpoint_counts;
  std::uint64_t pair_total = 0;

  std::size_t slot_count() const { return 2 * critical.size(); }
  /// Slot 2k is critical direction k, slot 2k+1 the open arc after it.
  std::size_t slot_of(const Point& direction) const;
  std::uint64_t slot_count_value(std::size_t slot) const;
};

ExposureProfile exposure_profile(const Point& q, const LineFamily& family);

/// Whether a crossing count is below 2/9 of all pairs.
bool is_exposed_count(std::uint64_t count, std::uint64_t pair_total);

enum class ArcFlag { Exposed, AlmostExposed };
const char* to_string(ArcFlag flag);

struct DirectionArc {
  Point start;
  Point end;
  bool start_closed = false;
  bool end_closed = false;
  bool full_circle = false;
  ArcFlag flag = ArcFlag::Exposed;
};

/// A union of arcs on the circle of directions, stored both as maximal arcs
/// and as per-slot membership over an ExposureProfile's slots.
struct DirectionArcSet {
  std::vector<DirectionArc> arcs;
  std::vector<bool> member;
  std::vector<bool> exposed;

  bool empty() const;
  bool proper() const;
  /// At most one maximal run of member slots around the circle.
  bool connected() const;
};

DirectionArcSet exposed_arcs(const Point& q, const LineFamily& family);
DirectionArcSet exposed_arcs(const ExposureProfile& profile);

/// Exposed directions plus every direction inside a region between two
/// exposed rays that holds fewer than a third of the projections.
DirectionArcSet almost_exposed_arcs(const Point& q, const LineFamily& family);
DirectionArcSet almost_exposed_arcs(const ExposureProfile& profile);

/// First cell sample, in lexicographic order, with no exposed direction.
std::optional<Point> find_unexposed_point(const LineFamily& family);

/// Tangents to the unit circle at ((1-t^2)/(1+t^2), 2t/(1+t^2)) for t in
/// params (default k/(n-1)), i.e. points on the quarter arc from (1,0) to (0,1).
LineFamily tangent_family(std::size_t n, std::optional<std::vector<Scalar>> params = std::nullopt);

struct TangentClassification {
  std::uint64_t n1 = 0;  // q and the circle on the same side, tangency clockwise of q
  std::uint64_t n2 = 0;  // line separates q from the circle
  std::uint64_t n3 = 0;  // same side, tangency counterclockwise of q

  std::uint64_t product() const { return n1 * n2 * n3; }
};

TangentClassification classify_tangents(const Point& q, const LineFamily& family);

struct ExtremalReport {
  std::size_t n = 0;
  std::uint64_t max_count = 0;
  std::uint64_t total = 0;
  std::uint64_t product_bound = 0;  // floor(n^3 / 27)
  Scalar product_bound_exact;       // n^3 / 27
  Scalar gromov_floor;              // (2/9) C(n,3)
  Scalar max_fraction;
  Scalar product_fraction;          // (n^3/27) / C(n,3)
  bool within_product_bound = false;
  Point witness;
  Point anchor;
  TangentClassification classes;
};

ExtremalReport extremal_report(std::size_t n, unsigned threads = 1);

}  // namespace hcover
