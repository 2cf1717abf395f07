#pragma once
// The end-to-end checks 1..12, shared by the acceptance test and the CLI.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "caspr/ring.hpp"

namespace caspr {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // one line per measured quantity
  double seconds = 0;
};

inline constexpr int kNumCriteria = 12;

// expected tile frequencies, Gamma ... Psi
std::array<RealQuadratic, 9> expected_frequencies();

CriterionResult run_criterion(int id);
// runs the given criteria (all when empty) and reports each as it finishes
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids = {},
                                          const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r, bool with_detail);

}  // namespace caspr
