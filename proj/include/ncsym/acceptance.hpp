#pragma once

#include <string>
#include <vector>

namespace ncsym {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // one line; the first failing check when !passed
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1-based). Exceptions are reported as failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace ncsym
