// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rissec/secrecy.hpp"

using namespace rissec;

TEST_CASE("snr") {
  CHECK(snr(1.0, Complex(0, 0), 1.0) == 0.0);
  CHECK(snr(1.0, Complex(1, 0), 1.0) == 1.0);
  CHECK(snr(0.1, Complex(1e-5, 0), 1.584893192461111e-13) ==
        doctest::Approx(63.095734448019435).epsilon(1e-12));
  CHECK_THROWS_AS(snr(1.0, Complex(1, 0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(snr(1.0, Complex(1, 0), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(snr(0.0, Complex(1, 0), 1.0), std::invalid_argument);
}

TEST_CASE("secrecy rate sample") {
  CHECK(secrecy_rate_sample({2.0, 2.0}) == 0.0);
  CHECK(secrecy_rate_sample({3.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(secrecy_rate_sample({0.0, 10.0}) == 0.0);
}

TEST_CASE("sop indicator, inclusive boundary") {
  CHECK(sop_indicator({2.0, 2.0}, 0.0));        // 0 <= 0 counts as outage
  CHECK(sop_indicator({3.0, 1.0}, 1.0));        // boundary
  CHECK_FALSE(sop_indicator({3.0, 1.0}, 0.5));
  CHECK_THROWS_AS(sop_indicator({1.0, 1.0}, -0.5), std::invalid_argument);
}

TEST_CASE("indicator and rate sample are consistent") {
  const ScenarioContext ctx((ScenarioConfig()));
  for (int i = 0; i < 500; ++i) {
    RandomStream trial(11, static_cast<std::uint64_t>(i));
    const TrialResult r = run_trial(ctx, Scheme::ran, trial);
    for (const double rate : {0.0, 0.5, 1.0, 2.0}) {
      if (r.secrecy_rate > rate) {
        CHECK_FALSE(sop_indicator(r.snr, rate));
      }
      const double log_ratio =
          std::log2((1.0 + r.snr.snr_d) / (1.0 + r.snr.snr_e));
      if (r.secrecy_rate <= rate && log_ratio >= 0.0) {
        CHECK(sop_indicator(r.snr, rate));
      }
    }
  }
}

TEST_CASE("normal quantile") {
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
  CHECK(normal_quantile(0.975) ==
        doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.025) ==
        doctest::Approx(-1.959963984540054).epsilon(1e-12));
  for (const double p : {0.001, 0.1, 0.3, 0.7, 0.99, 0.999}) {
    const double x = normal_quantile(p);
    CHECK(0.5 * std::erfc(-x / std::sqrt(2.0)) == doctest::Approx(p).epsilon(1e-12));
  }
  CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("wilson interval brackets the sample mean") {
  for (const std::int64_t n : {1, 2, 10, 100, 10000}) {
    for (std::int64_t s = 0; s <= n; s += std::max<std::int64_t>(1, n / 7)) {
      const EstimateWithCI est = wilson_interval(s, n);
      const double p_hat = static_cast<double>(s) / static_cast<double>(n);
      CHECK(est.ci_lo >= 0.0);
      CHECK(est.ci_hi <= 1.0);
      CHECK(est.ci_lo <= p_hat + 1e-15);
      CHECK(est.ci_hi >= p_hat - 1e-15);
      CHECK(est.mean == p_hat);
    }
  }
  CHECK_THROWS_AS(wilson_interval(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(0, 0), std::invalid_argument);
}

TEST_CASE("mean interval and the single-trial sentinel") {
  const EstimateWithCI one = mean_interval(3.0, 0.0, 1);
  CHECK(one.mean == 3.0);
  CHECK(std::isinf(one.ci_lo));
  CHECK(std::isinf(one.ci_hi));

  const EstimateWithCI est = mean_interval(2.0, 4.0, 100);
  CHECK(est.ci_lo == doctest::Approx(2.0 - 1.959963984540054 * 0.2).epsilon(1e-12));
  CHECK(est.ci_hi == doctest::Approx(2.0 + 1.959963984540054 * 0.2).epsilon(1e-12));
}

TEST_CASE("run_trial is deterministic in (seed, trial index)") {
  ScenarioConfig config;
  config.k_elems = 32;
  config.rates = {0.0, 1.0};
  const ScenarioContext ctx(config);
  for (const Scheme scheme : {Scheme::opt, Scheme::ran, Scheme::max_main}) {
    RandomStream a(99, 4);
    RandomStream b(99, 4);
    const TrialResult ra = run_trial(ctx, scheme, a);
    const TrialResult rb = run_trial(ctx, scheme, b);
    CHECK(ra.snr.snr_d == rb.snr.snr_d);
    CHECK(ra.snr.snr_e == rb.snr.snr_e);
    CHECK(ra.secrecy_rate == rb.secrecy_rate);
    CHECK(ra.outage == rb.outage);
  }
}

TEST_CASE("run_trial degenerate scatter evaluates by hand") {
  ScenarioConfig config;
  config.k_elems = 4;
  config.rates = {0.5};
  ScenarioContext ctx(config);
  // freeze the fading: mu-only channels with hand-picked budgets
  ctx.link_sr = LinkBudget{1.0, 1.0, 0.0, 2.0, 0.0};
  ctx.link_rd = LinkBudget{1.0, 1.0, 0.0, 3.0, 0.0};
  ctx.link_re = LinkBudget{1.0, 1.0, 0.0, 0.5, 0.0};
  ctx.ptx_watts = 2.0;
  ctx.noise_watts = 0.5;

  RandomStream stream(1, 0);
  const TrialResult max_main = run_trial(ctx, Scheme::max_main, stream);
  // toward D: 4 terms of 2*3 co-phased -> |24|^2 * 2 / 0.5 = 2304
  CHECK(max_main.snr.snr_d == doctest::Approx(2304.0).epsilon(1e-12));
  // toward E: 4 terms of 2*0.5 -> |4|^2 * 2 / 0.5 = 64
  CHECK(max_main.snr.snr_e == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(max_main.secrecy_rate ==
        doctest::Approx(std::log2(2305.0 / 65.0)).epsilon(1e-12));
  CHECK(max_main.outage == std::vector<bool>{false});

  RandomStream stream2(1, 0);
  const TrialResult opt = run_trial(ctx, Scheme::opt, stream2);
  // equal amplitudes pair off and cancel toward E; the same phases also
  // cancel the (identical up to scale) terms toward D
  CHECK(opt.snr.snr_d <= 1e-25);
  CHECK(opt.snr.snr_e <= 1e-25);
  CHECK(opt.secrecy_rate <= 1e-25);
  CHECK(opt.outage == std::vector<bool>{true});

  // repeat: deterministic despite the unused stream draws
  RandomStream stream3(1, 0);
  const TrialResult opt2 = run_trial(ctx, Scheme::opt, stream3);
  CHECK(opt.snr.snr_d == opt2.snr.snr_d);
  CHECK(opt.snr.snr_e == opt2.snr.snr_e);
}

TEST_CASE("opt suppresses the eavesdropper on common random numbers") {
  ScenarioConfig config;  // reference scenario, 144 elements
  const ScenarioContext ctx(config);
  constexpr int trials = 10000;
  int suppressed = 0;
  for (int i = 0; i < trials; ++i) {
    RandomStream opt_stream(42, static_cast<std::uint64_t>(i));
    RandomStream ran_stream(42, static_cast<std::uint64_t>(i));
    const TrialResult opt = run_trial(ctx, Scheme::opt, opt_stream);
    const TrialResult ran = run_trial(ctx, Scheme::ran, ran_stream);
    suppressed += opt.snr.snr_e <= ran.snr.snr_e ? 1 : 0;
  }
  CHECK(static_cast<double>(suppressed) / trials >= 0.95);
}

TEST_CASE("estimate: SOP is exactly non-decreasing in the rate") {
  ScenarioConfig config;
  config.k_elems = 24;
  config.rates = {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0};
  const ScenarioContext ctx(config);
  for (const Scheme scheme : {Scheme::opt, Scheme::ran}) {
    const SecrecyEstimate est = estimate(ctx, scheme, 2000, 7);
    for (std::size_t r = 1; r < est.sop.size(); ++r) {
      CHECK(est.sop[r].mean >= est.sop[r - 1].mean);
    }
  }
}

TEST_CASE("estimate: all-outage degenerate input") {
  ScenarioConfig config;
  config.k_elems = 2;
  config.rates = {1000.0};
  const SecrecyEstimate est = estimate(config, Scheme::ran, 64, 3);
  CHECK(est.sop[0].mean == 1.0);
}

TEST_CASE("estimate is bit-identical across worker counts") {
  ScenarioConfig config;
  config.k_elems = 16;
  config.rates = {0.0, 1.0, 2.0};
  const ScenarioContext ctx(config);
  const SecrecyEstimate serial = estimate(ctx, Scheme::ran, 999, 12345, 1);
  const SecrecyEstimate parallel = estimate(ctx, Scheme::ran, 999, 12345, 8);
  REQUIRE(serial.sop.size() == parallel.sop.size());
  for (std::size_t r = 0; r < serial.sop.size(); ++r) {
    CHECK(serial.sop[r].mean == parallel.sop[r].mean);
    CHECK(serial.sop[r].ci_lo == parallel.sop[r].ci_lo);
    CHECK(serial.sop[r].ci_hi == parallel.sop[r].ci_hi);
  }
  CHECK(serial.sr.mean == parallel.sr.mean);
  CHECK(serial.sr.ci_lo == parallel.sr.ci_lo);
  CHECK(serial.sr.ci_hi == parallel.sr.ci_hi);
}

TEST_CASE("estimate rejects empty trial budgets") {
  ScenarioConfig config;
  CHECK_THROWS_AS(estimate(config, Scheme::opt, 0, 1), std::invalid_argument);
}
