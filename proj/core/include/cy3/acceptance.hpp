#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cy3/report.hpp"

namespace cy3 {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // first failure, or a short summary
};

struct AcceptanceConfig {
  std::string catalog_path;  // empty = default
  double tol = 1e-12;
  int samples = 100;
  std::uint64_t seed = 2026;
  // Residual thresholds scale with tol but never drop below the pinned
  // defaults (1e-9 residuals, 1e-6 metric agreement, 1e-12 eta check).
  double residual_limit() const { return std::max(1e-9, 10.0 * tol); }
  double metric_limit() const { return std::max(1e-6, 1e4 * tol); }
  double eta_limit() const { return std::max(1e-12, tol); }
};

// The full verification suite.  Each criterion is self-contained and reports
// pass/fail with timing; `on_result` (if set) is called as results arrive.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceConfig& cfg,
    const std::function<void(const CriterionResult&)>& on_result = nullptr);

bool all_passed(const std::vector<CriterionResult>& rs);

}  // namespace cy3
