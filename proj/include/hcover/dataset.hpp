#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hcover/continuity.hpp"
#include "hcover/dual.hpp"
#include "hcover/selection.hpp"

namespace hcover {

using Json = nlohmann::json;

enum class DatasetKind { Points, Lines, ColoredPoints, Path };

const char* to_string(DatasetKind kind);

struct DatasetMeta {
  std::optional<std::uint64_t> seed;
  std::string generator;
  std::map<std::string, std::string> params;

  bool operator==(const DatasetMeta&) const = default;
};

struct Dataset {
  DatasetKind kind = DatasetKind::Points;
  PointSet points;  // POINTS and COLORED_POINTS
  LineFamily lines;
  std::optional<MotionPath> path;
  DatasetMeta meta;
};

bool operator==(const Dataset& a, const Dataset& b);

/// Exact parse. Numbers may be "p/q" strings, integers or finite decimals;
/// exponents are rejected. Errors carry a JSON pointer or byte offset.
Dataset parse_dataset(std::string_view text);

Json dataset_to_json(const Dataset& ds);
std::string emit_dataset(const Dataset& ds);

struct GenerateOptions {
  std::int64_t range = 50;        // coordinate box half-width
  std::size_t keyframes = 2;      // PATH only
  std::size_t max_retries = 100;  // general-position regeneration budget
};

/// Seeded instances. Kinds: POINTS, CONVEX, LINES, TANGENT, COLORED_POINTS,
/// PATH. Throws GenerationError when the retry budget runs out and
/// DomainError on an unknown kind.
Dataset generate(std::string_view kind, std::size_t n, std::uint64_t seed, const GenerateOptions& options = {});

// Report building blocks, all exact.
Json scalar_json(const Scalar& s);
Json point_json(const Point& p);
Json line_json(const Hyperplane& line);
Json depth_report_json(const DepthReport& r);

}  // namespace hcover
