// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rissec/scenario.hpp"
#include "rissec/types.hpp"

namespace rissec {

struct SnrPair {
  double snr_d = 0.0;
  double snr_e = 0.0;
};

/// ptx * |cascade|^2 / noise. Throws on non-positive power or noise.
double snr(double ptx_watts, Complex cascade_amp, double noise_watts);

/// max(0, log2((1 + snr_d) / (1 + snr_e))) in bits/s/Hz.
double secrecy_rate_sample(const SnrPair& p);

/// True iff the unclamped log-ratio is <= rate (boundary counts as outage).
bool sop_indicator(const SnrPair& p, double rate);

struct EstimateWithCI {
  double mean = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::int64_t trials = 0;
  double confidence = 0.95;

  double half_width() const { return 0.5 * (ci_hi - ci_lo); }
};

/// Two-sided standard-normal quantile for the given confidence level.
double confidence_z(double confidence);

/// Inverse standard-normal CDF.
double normal_quantile(double p);

/// Wilson score interval for a proportion; the interval always brackets
/// the sample mean successes/n.
EstimateWithCI wilson_interval(std::int64_t successes, std::int64_t n,
                               double confidence = 0.95);

/// Normal-approximation interval for a sample mean. With n = 1 the
/// half-width is the +infinity sentinel.
EstimateWithCI mean_interval(double mean, double sample_var, std::int64_t n,
                             double confidence = 0.95);

struct TrialResult {
  SnrPair snr;
  double secrecy_rate = 0.0;
  std::vector<bool> outage;  // one flag per configured target rate
};

/// One Monte-Carlo trial: samples the three hops (S->RIS, RIS->D, RIS->E in
/// that fixed order), applies the scheme's phase design, and evaluates both
/// cascades under the same configuration.
TrialResult run_trial(const ScenarioContext& ctx, Scheme scheme,
                      RandomStream& stream);
TrialResult run_trial(const ScenarioConfig& config, Scheme scheme,
                      RandomStream& stream);

struct SecrecyEstimate {
  std::vector<EstimateWithCI> sop;  // aligned with the scenario's rate list
  EstimateWithCI sr;
};

/*
 * Monte-Carlo estimator. Trial i draws from RandomStream(master_seed, i),
 * so the realization set is fixed by (scenario, trials, master_seed) alone.
 * Workers only partition the trial loop; per-trial outputs are stored by
 * index and reduced in index order (integer outage counts, compensated sums
 * for the rate), making the result bit-identical for any worker count.
 */
SecrecyEstimate estimate(const ScenarioContext& ctx, Scheme scheme,
                         std::int64_t trials, std::uint64_t master_seed,
                         int workers = 1);
SecrecyEstimate estimate(const ScenarioConfig& config, Scheme scheme,
                         std::int64_t trials, std::uint64_t master_seed,
                         int workers = 1);

}  // namespace rissec
