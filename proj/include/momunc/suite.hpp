#pragma once

#include <string>
#include <vector>

namespace momunc {

struct SuiteConfig {
  bool quick = false;   // reduced grids, finishes in a few seconds
  int threads = 0;      // 0: hardware concurrency (sweep-backed checks)
  unsigned seed = 20260808u;
  // Test fixture: scales the lambda>1 branch of M by 0.99 inside the suite's
  // own evaluations, to prove failures propagate into the report.
  bool corrupt_m_branch = false;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst_residual = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  double total_seconds = 0.0;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Executes every module invariant as a named check and reports per-check
// status, worst residual and runtime. Failures are report entries, never
// exceptions.
SuiteReport run_invariant_suite(const SuiteConfig& config = {});

std::string format_report(const SuiteReport& report);
std::string report_to_json(const SuiteReport& report);

}  // namespace momunc
