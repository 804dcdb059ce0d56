// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief The end-to-end verification suite: every reproducible headline
 *        result, run at fixed tolerances with fixed seeds.
 */

#pragma once

#include <span>
#include <string>
#include <vector>

namespace fermicc::verify {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // residuals / counts, for the report line
};

/// Criteria are numbered 1..10; see run_all for the catalogue.
std::vector<CheckResult> run_criterion(int k);
std::vector<CheckResult> run_criteria(std::span<const int> ks);
std::vector<CheckResult> run_all();

/// Suites: "all", "six", "seven", "perturb", "four8". Throws
/// std::invalid_argument for anything else.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace fermicc::verify
