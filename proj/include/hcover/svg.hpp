#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcover/continuity.hpp"
#include "hcover/dual.hpp"
#include "hcover/selection.hpp"

namespace hcover {

inline constexpr std::size_t kDefaultGrid = 200;

/// Depth landscape of a planar point set sampled at grid x grid cell
/// centres, banded by depth fraction, with the points and an optional
/// argmax marker on top.
std::string depth_svg(const PointSet& set, const std::optional<Point>& argmax, std::size_t grid = kDefaultGrid);

/// Same for the dual depth of a line family, drawn with its lines.
std::string dual_svg(const LineFamily& family, const std::optional<Point>& marker,
                     std::size_t grid = kDefaultGrid);

/// One landscape per sample, then a timeline strip of max counts with
/// jumps and degenerate samples marked.
std::vector<std::string> sweep_svgs(const MotionPath& path, const ContinuityReport& report, std::size_t grid);

}  // namespace hcover
