// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include "hcover/battery.hpp"

namespace {

using hcover::BatteryConfig;
using hcover::CheckResult;

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kTrials = 50;  // full acceptance sizes

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<CheckResult(const BatteryConfig&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int id, const char* title, bool passed, double secs, double budget, const std::string& details) {
  const bool ok = passed && secs <= budget;
  std::printf("criterion %d %-26s %s  (%.1f s, budget %.0f s)\n", id, title, ok ? "PASS" : "FAIL", secs, budget);
  std::printf("    %s\n", details.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const BatteryConfig serial{kSeed, kTrials, 1};
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", 300, hcover::check_oracle_equivalence},
      {2, "selection bound", 600, hcover::check_selection_bound},
      {3, "dual bound", 300, hcover::check_dual_bound},
      {4, "tightness", 300, hcover::check_tightness},
      {5, "base-cut identity", 120, hcover::check_base_cut_identity},
      {6, "exposure semantics", 120, hcover::check_exposure_semantics},
      {7, "transversal", 120, hcover::check_transversal},
      {8, "continuity", 600, hcover::check_continuity},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult r = c.run(serial);
    all &= report(c.id, c.title, r.passed, seconds_since(t0), c.budget_seconds, r.details.dump());
  }

  // The whole verify battery, once serially and once with several workers;
  // the two reports must agree byte for byte.
  const unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  const auto t0 = std::chrono::steady_clock::now();
  const std::string first = hcover::run_battery(serial).dump(2);
  const std::string second = hcover::run_battery(BatteryConfig{kSeed, kTrials, workers}).dump(2);
  all &= report(9, "determinism", first == second, seconds_since(t0), 1200,
                "threads 1 vs " + std::to_string(workers) + ": " + std::to_string(first.size()) + " vs " +
                    std::to_string(second.size()) + " bytes, " + (first == second ? "identical" : "DIFFERENT"));

  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 1;
}
