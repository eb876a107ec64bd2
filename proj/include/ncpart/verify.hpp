#pragma once

#include <string>
#include <vector>

namespace ncpart {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct VerifyOptions {
  int N = 4;
  int bound = 6;
  unsigned seed = 1;
};

/// Named invariant suites: core, category, projective, fusion, linmap,
/// reps, acceptance, all.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt);

/// The eleven acceptance criteria with their pinned parameters.
std::vector<CheckResult> acceptance_criteria();

}  // namespace ncpart
