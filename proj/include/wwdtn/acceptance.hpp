#pragma once

#include <string>
#include <vector>

namespace wwdtn {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget = 0.0;  // runtime limit in seconds; part of the pass condition
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1-based). Criteria 7 and 8 share one 2D minimization.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS [id] name: detail (seconds / budget)".
std::string format_result(const CriterionResult& r);

}  // namespace wwdtn
