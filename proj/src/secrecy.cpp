// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include "rissec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rissec/phase_design.hpp"

namespace rissec {

double snr(double ptx_watts, Complex cascade_amp, double noise_watts) {
  if (!(noise_watts > 0.0)) {
    throw std::invalid_argument("snr: noise power must be positive");
  }
  if (!(ptx_watts > 0.0)) {
    throw std::invalid_argument("snr: transmit power must be positive");
  }
  return ptx_watts * std::norm(cascade_amp) / noise_watts;
}

double secrecy_rate_sample(const SnrPair& p) {
  return std::max(0.0, std::log2((1.0 + p.snr_d) / (1.0 + p.snr_e)));
}

bool sop_indicator(const SnrPair& p, double rate) {
  if (!(rate >= 0.0)) {
    throw std::invalid_argument("sop_indicator: target rate must be >= 0");
  }
  return std::log2((1.0 + p.snr_d) / (1.0 + p.snr_e)) <= rate;
}

namespace {

// Acklam's rational approximation to the inverse normal CDF, sharpened by
// one Halley step against erfc. Good to ~1e-15 over (0, 1).
double acklam(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  }
  double x = acklam(p);
  const double err = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u =
      err * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double confidence_z(double confidence) {
  if (!(confidence > 0.0) || !(confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  return normal_quantile(0.5 + 0.5 * confidence);
}

EstimateWithCI wilson_interval(std::int64_t successes, std::int64_t n,
                               double confidence) {
  if (n < 1 || successes < 0 || successes > n) {
    throw std::invalid_argument("wilson_interval: bad counts");
  }
  const double z = confidence_z(confidence);
  const double nn = static_cast<double>(n);
  const double p_hat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p_hat + z2 / (2.0 * nn)) / denom;
  const double spread =
      z * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn)) / denom;

  EstimateWithCI est;
  est.mean = p_hat;
  est.ci_lo = std::max(0.0, center - spread);
  est.ci_hi = std::min(1.0, center + spread);
  est.trials = n;
  est.confidence = confidence;
  return est;
}

EstimateWithCI mean_interval(double mean, double sample_var, std::int64_t n,
                             double confidence) {
  if (n < 1) {
    throw std::invalid_argument("mean_interval: need at least one sample");
  }
  EstimateWithCI est;
  est.mean = mean;
  est.trials = n;
  est.confidence = confidence;
  if (n == 1) {
    // spread undefined with a single sample
    est.ci_lo = -std::numeric_limits<double>::infinity();
    est.ci_hi = std::numeric_limits<double>::infinity();
    return est;
  }
  const double half = confidence_z(confidence) *
                      std::sqrt(sample_var / static_cast<double>(n));
  est.ci_lo = mean - half;
  est.ci_hi = mean + half;
  return est;
}

TrialResult run_trial(const ScenarioContext& ctx, Scheme scheme,
                      RandomStream& stream) {
  const Eigen::Index k_elems = ctx.config.k_elems;
  const ChannelVector g_sr = sample_channel(ctx.link_sr, k_elems, stream);
  const ChannelVector g_rd = sample_channel(ctx.link_rd, k_elems, stream);
  const ChannelVector g_re = sample_channel(ctx.link_re, k_elems, stream);

  PhaseVector phases;
  switch (scheme) {
    case Scheme::opt:
      phases = heuristic_min_eve(g_sr, g_re);
      break;
    case Scheme::ran:
      phases = random_phases(k_elems, stream);
      break;
    case Scheme::max_main:
      phases = max_main_phases(g_sr, g_rd);
      break;
  }

  const Complex toward_d = cascade(g_sr, phases, g_rd);
  const Complex toward_e = cascade(g_sr, phases, g_re);

  TrialResult result;
  result.snr.snr_d = snr(ctx.ptx_watts, toward_d, ctx.noise_watts);
  result.snr.snr_e = snr(ctx.ptx_watts, toward_e, ctx.noise_watts);
  result.secrecy_rate = secrecy_rate_sample(result.snr);
  result.outage.reserve(ctx.config.rates.size());
  for (const double rate : ctx.config.rates) {
    result.outage.push_back(sop_indicator(result.snr, rate));
  }
  return result;
}

TrialResult run_trial(const ScenarioConfig& config, Scheme scheme,
                      RandomStream& stream) {
  return run_trial(ScenarioContext(config), scheme, stream);
}

namespace {

struct TrialCore {
  double snr_d;
  double snr_e;
  double secrecy_rate;
};

class KahanSum {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

SecrecyEstimate estimate(const ScenarioContext& ctx, Scheme scheme,
                         std::int64_t trials, std::uint64_t master_seed,
                         int workers) {
  if (trials < 1) {
    throw std::invalid_argument("estimate: need at least one trial");
  }
  std::vector<TrialCore> cores(static_cast<std::size_t>(trials));

  const auto fill = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      RandomStream stream(master_seed, static_cast<std::uint64_t>(i));
      const TrialResult trial = run_trial(ctx, scheme, stream);
      cores[static_cast<std::size_t>(i)] = {trial.snr.snr_d, trial.snr.snr_e,
                                            trial.secrecy_rate};
    }
  };

  const int used = static_cast<int>(
      std::clamp<std::int64_t>(workers, 1, trials));
  if (used == 1) {
    fill(0, trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(used));
    for (int w = 0; w < used; ++w) {
      const std::int64_t begin = trials * w / used;
      const std::int64_t end = trials * (w + 1) / used;
      pool.emplace_back(fill, begin, end);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  // Reduce strictly in trial order: integer outage counts and compensated
  // sums, so the result cannot depend on the worker partition.
  const auto& rates = ctx.config.rates;
  std::vector<std::int64_t> outage_counts(rates.size(), 0);
  KahanSum sr_sum;
  for (const TrialCore& core : cores) {
    const SnrPair p{core.snr_d, core.snr_e};
    for (std::size_t r = 0; r < rates.size(); ++r) {
      outage_counts[r] += sop_indicator(p, rates[r]) ? 1 : 0;
    }
    sr_sum.add(core.secrecy_rate);
  }
  const double sr_mean = sr_sum.value() / static_cast<double>(trials);
  KahanSum sr_sqdev;
  for (const TrialCore& core : cores) {
    const double dev = core.secrecy_rate - sr_mean;
    sr_sqdev.add(dev * dev);
  }
  const double sr_var =
      trials > 1 ? sr_sqdev.value() / static_cast<double>(trials - 1) : 0.0;

  SecrecyEstimate result;
  result.sop.reserve(rates.size());
  for (std::size_t r = 0; r < rates.size(); ++r) {
    result.sop.push_back(wilson_interval(outage_counts[r], trials));
  }
  result.sr = mean_interval(sr_mean, sr_var, trials);
  return result;
}

SecrecyEstimate estimate(const ScenarioConfig& config, Scheme scheme,
                         std::int64_t trials, std::uint64_t master_seed,
                         int workers) {
  return estimate(ScenarioContext(config), scheme, trials, master_seed, workers);
}

}  // namespace rissec
