#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcover/dataset.hpp"

namespace hcover {

/// Instance counts scale with `trials`; trials = 50 gives the full
/// acceptance sizes (200 sets for the oracle checks, 10^4 triples, ...).
struct BatteryConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 50;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  Json details;
};

CheckResult check_oracle_equivalence(const BatteryConfig& cfg);
CheckResult check_selection_bound(const BatteryConfig& cfg);
CheckResult check_dual_bound(const BatteryConfig& cfg);
CheckResult check_tightness(const BatteryConfig& cfg);
CheckResult check_base_cut_identity(const BatteryConfig& cfg);
CheckResult check_exposure_semantics(const BatteryConfig& cfg);
CheckResult check_transversal(const BatteryConfig& cfg);
CheckResult check_continuity(const BatteryConfig& cfg);
/// The remaining per-module oracle equivalences: simplex containment,
/// colorful depth, candidate optimality, heavy witnesses, the tangent
/// product bound and planar flat touching.
CheckResult check_module_oracles(const BatteryConfig& cfg);

/// The battery report for results already computed under `cfg`.
Json battery_json(const BatteryConfig& cfg, const std::vector<CheckResult>& results);

/// Every check above, in order. The JSON holds no timings, so equal configs
/// give equal bytes whatever the thread count.
Json run_battery(const BatteryConfig& cfg);

Json check_json(const CheckResult& r);

}  // namespace hcover
