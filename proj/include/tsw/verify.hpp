#pragma once

#include <string>
#include <vector>

#include "tsw/numeric.hpp"

namespace tsw {

struct CheckResult {
  std::string name;
  bool passed = false;
  double margin = 0.0;  // worst slack observed; negative means violated
  std::string detail;
};

/// Named property suites. Known names: gram, selberg, risk, sharpness,
/// smallcase, prefix, eta, cap, combine, decompose, realwitness, rearrange.
std::vector<CheckResult> run_suite(const std::string& name, Seed seed);

/// The full acceptance battery, one result per criterion, in order.
std::vector<CheckResult> acceptance_criteria(Seed seed);

std::vector<std::string> suite_names();

}  // namespace tsw
