// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rissec {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Invariant suite: pair cancellation, sandwich bounds, grid-oracle
/// comparisons (element counts <= 6), sampler moments, CI calibration and
/// determinism. `trials` scales the statistical checks; failures report the
/// (seed, substream) that triggered them.
ValidationReport run_validation(int levels, std::int64_t trials,
                                std::uint64_t seed);

/// Fixed-value smoke checks over every public operation.
ValidationReport run_selftest();

void print_report(const ValidationReport& report, std::ostream& out);

}  // namespace rissec
