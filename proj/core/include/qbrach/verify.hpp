// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbrach {

struct CheckResult {
  std::string name;
  bool pass;
  double observed;   // worst residual / statistic seen
  double tolerance;  // threshold it was compared against
  std::string detail;
};

// Runs the full invariant suite of every module. Deterministic given the
// seed. `filter` restricts to checks whose name contains the substring.
// Per-check tolerances can be overridden through config().tolerances.
std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          std::string_view filter = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qbrach
