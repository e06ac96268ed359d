#include <string>

#include "doctest.h"
#include "momunc/suite.hpp"

using namespace momunc;

TEST_CASE("quick invariant suite passes end to end") {
  SuiteConfig cfg;
  cfg.quick = true;
  const SuiteReport report = run_invariant_suite(cfg);
  for (const CheckResult& c : report.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.passed);
  }
  CHECK(report.all_passed());
  CHECK(report.total_seconds < 5.0);
  CHECK(report.find("bounds.M_increasing_in_lambda") != nullptr);
  const std::string text = format_report(report);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("corrupting the lambda>1 branch of M is caught by the suite") {
  SuiteConfig cfg;
  cfg.quick = true;
  cfg.corrupt_m_branch = true;
  const SuiteReport report = run_invariant_suite(cfg);
  CHECK_FALSE(report.all_passed());
  const CheckResult* mono = report.find("bounds.M_increasing_in_lambda");
  REQUIRE(mono != nullptr);
  CHECK_FALSE(mono->passed);
  const CheckResult* maxent = report.find("bounds.maxent_saturation");
  REQUIRE(maxent != nullptr);
  CHECK_FALSE(maxent->passed);
  // Checks that do not route through M still pass.
  const CheckResult* gamma = report.find("specfun.gamma_recurrence");
  REQUIRE(gamma != nullptr);
  CHECK(gamma->passed);
}

TEST_CASE("suite reports are deterministic for a fixed config") {
  SuiteConfig cfg;
  cfg.quick = true;
  const SuiteReport a = run_invariant_suite(cfg);
  const SuiteReport b = run_invariant_suite(cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].passed == b.checks[i].passed);
    CHECK(a.checks[i].worst_residual == b.checks[i].worst_residual);
  }
}
