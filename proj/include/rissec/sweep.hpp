// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "rissec/scenario.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

enum class SweepVariable { rate, ptx_dbm, k_elems, k_sr, k_rd, k_re };

std::string_view sweep_variable_name(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);

struct SweepSpec {
  SweepVariable variable = SweepVariable::rate;
  std::vector<double> values;
  ScenarioConfig base;
};

struct SweepSummary {
  std::int64_t cells = 0;
  std::int64_t rows = 0;
};

inline constexpr std::string_view kCsvHeader =
    "variable,value,scheme,rate,sop,sop_ci_lo,sop_ci_hi,sr,sr_ci_lo,sr_ci_hi,"
    "trials,seed";

/// Seed for one sweep cell; stable under insertion of new sweep points.
std::uint64_t cell_seed(std::uint64_t master_seed, std::string_view variable,
                        std::size_t value_index, std::size_t scheme_index);

/*
 * Evaluates every (value, scheme) cell and writes one CSV row per cell per
 * target rate, in deterministic cell order. Each cell runs estimate() under
 * its own derived seed. A rate sweep is one cell per scheme whose rate list
 * is the swept values, so all rates share trials and the emitted SOP column
 * is exactly non-decreasing in rate.
 */
SweepSummary run_sweep(const SweepSpec& spec, std::ostream& out,
                       int workers = 1);

/// Values parser for sweep points: "0,0.5,1" or "lo:hi:step" (inclusive).
std::vector<double> parse_value_list(std::string_view text);

/// "%.17g" rendering used for every floating-point CSV field.
std::string format_g17(double x);

}  // namespace rissec
