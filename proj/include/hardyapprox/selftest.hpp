#pragma once

#include <string>
#include <vector>

namespace hardy {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// The release gate: every numbered check below must pass, including its
// wall-clock budget. Tolerances are pinned here, not configurable.
std::vector<CheckOutcome> run_acceptance_suite();

bool all_passed(const std::vector<CheckOutcome>& outcomes);

}  // namespace hardy
