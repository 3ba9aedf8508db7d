#pragma once

#include <string>
#include <vector>

namespace sktlab {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic metrics only
  double seconds = 0.0;  // wall time, never part of the table
};

/// Built-in oracle suites: heat convergence, ODE oracle, closed form vs
/// sampling, conservation, SKT Jacobian consistency, kernel equivalence.
std::vector<SuiteResult> run_verify_suites();

/// Deterministic pass/fail table (no timings).
std::string format_verify_table(const std::vector<SuiteResult>& results);

}  // namespace sktlab
