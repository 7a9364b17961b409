// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include "rissec/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rissec/channel.hpp"
#include "rissec/phase_design.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/sweep.hpp"

namespace rissec {

namespace {

constexpr double kPi = std::numbers::pi;

class Harness {
 public:
  explicit Harness(ValidationReport& report) : report_(report) {}

  void check(const std::string& name, bool passed,
             const std::string& detail = "") {
    report_.checks.push_back({name, passed, detail});
  }

  template <typename T>
  void check_eq(const std::string& name, T actual, T expected) {
    std::ostringstream detail;
    if (!(actual == expected)) {
      detail << "got " << actual << ", want " << expected;
    }
    check(name, actual == expected, detail.str());
  }

  void check_near(const std::string& name, double actual, double expected,
                  double tol) {
    const bool ok = std::abs(actual - expected) <= tol;
    std::ostringstream detail;
    if (!ok) {
      detail << "got " << format_g17(actual) << ", want "
             << format_g17(expected) << " +/- " << tol;
    }
    check(name, ok, detail.str());
  }

 private:
  ValidationReport& report_;
};

ScenarioContext default_context() {
  return ScenarioContext(ScenarioConfig{});
}

std::string seed_detail(std::uint64_t seed, std::uint64_t substream) {
  std::ostringstream os;
  os << "seed=" << seed << " substream=" << substream;
  return os.str();
}

void check_pair_cancellation(Harness& h, const ScenarioContext& ctx,
                             std::int64_t realizations, std::uint64_t seed) {
  constexpr Eigen::Index kCounts[] = {2, 3, 16, 144};
  double worst = 0.0;
  std::uint64_t worst_sub = 0;
  std::uint64_t substream = 0;
  for (const Eigen::Index k : kCounts) {
    for (std::int64_t i = 0; i < realizations; ++i, ++substream) {
      RandomStream stream(seed, substream);
      const ChannelVector g_sr = sample_channel(ctx.link_sr, k, stream);
      const ChannelVector g_re = sample_channel(ctx.link_re, k, stream);
      const PhaseVector omega = heuristic_min_eve(g_sr, g_re);
      const double residual = pair_opposition_residual(g_sr, g_re, omega);
      if (residual > worst) {
        worst = residual;
        worst_sub = substream;
      }
    }
  }
  h.check("pair_cancellation", worst <= 1e-9,
          worst <= 1e-9 ? "max residual " + format_g17(worst)
                        : "residual " + format_g17(worst) + " at " +
                              seed_detail(seed, worst_sub));
}

void check_sandwich(Harness& h, const ScenarioContext& ctx,
                    std::int64_t realizations, std::uint64_t seed) {
  constexpr Eigen::Index kCounts[] = {2, 3, 16, 144};
  bool ok = true;
  std::string detail;
  std::uint64_t substream = 0;
  for (const Eigen::Index k : kCounts) {
    for (std::int64_t i = 0; i < realizations && ok; ++i, ++substream) {
      RandomStream stream(seed, substream);
      const ChannelVector g_sr = sample_channel(ctx.link_sr, k, stream);
      const ChannelVector g_re = sample_channel(ctx.link_re, k, stream);
      const AmplitudeVector amps = amplitude_profile(g_sr, g_re);
      const PhaseVector omega = heuristic_min_eve(g_sr, g_re);
      const double achieved = std::abs(cascade(g_sr, omega, g_re));
      const double lower = eve_lower_bound(amps);
      const double upper = pairing_residual_bound(amps);
      const double tol = 1e-9 * std::max(1.0, upper);
      if (achieved < lower - tol || achieved > upper + tol) {
        ok = false;
        detail = "bounds " + format_g17(lower) + " <= " + format_g17(achieved) +
                 " <= " + format_g17(upper) + " violated at " +
                 seed_detail(seed, substream);
      }
    }
  }
  h.check("sandwich_bound", ok, detail);
}

void check_grid_oracle(Harness& h, const ScenarioContext& ctx, int levels,
                       std::int64_t realizations, std::uint64_t seed) {
  constexpr Eigen::Index kCounts[] = {2, 4, 6};
  bool ok = true;
  std::string detail;
  double heuristic_sq = 0.0;
  double random_sq = 0.0;
  std::uint64_t substream = 1u << 20;
  for (const Eigen::Index k : kCounts) {
    // keep the levels^k * realizations budget flat across element counts
    const int k_levels = k <= 2 ? levels : k <= 4 ? std::min(levels, 12)
                                                  : std::min(levels, 6);
    const std::int64_t k_reals =
        k <= 4 ? realizations : std::min<std::int64_t>(realizations, 10);
    for (std::int64_t i = 0; i < k_reals && ok; ++i, ++substream) {
      RandomStream stream(seed, substream);
      const ChannelVector g_sr = sample_channel(ctx.link_sr, k, stream);
      const ChannelVector g_re = sample_channel(ctx.link_re, k, stream);
      const AmplitudeVector amps = amplitude_profile(g_sr, g_re);
      const double lower = eve_lower_bound(amps);
      const double tol = 1e-9 * std::max(1.0, amps.sum());

      const double heuristic =
          std::abs(cascade(g_sr, heuristic_min_eve(g_sr, g_re), g_re));
      const GridSearchResult coarse = grid_oracle_min(g_sr, g_re, k_levels);
      const GridSearchResult fine = grid_oracle_min(g_sr, g_re, 2 * k_levels);
      const double random =
          std::abs(cascade(g_sr, random_phases(k, stream), g_re));
      heuristic_sq += heuristic * heuristic;
      random_sq += random * random;

      if (heuristic < lower - tol) {
        ok = false;
        detail = "heuristic below lower bound at " + seed_detail(seed, substream);
      } else if (coarse.value < lower - tol) {
        ok = false;
        detail = "grid minimum below lower bound at " + seed_detail(seed, substream);
      } else if (fine.value > coarse.value + tol) {
        ok = false;
        detail = "grid refinement increased the minimum at " +
                 seed_detail(seed, substream);
      }
    }
  }
  if (ok && !(heuristic_sq < random_sq)) {
    ok = false;
    detail = "heuristic mean square " + format_g17(heuristic_sq) +
             " not below random " + format_g17(random_sq);
  }
  h.check("grid_oracle", ok, detail);
}

void check_sampler_moments(Harness& h, const ScenarioContext& ctx,
                           std::uint64_t seed) {
  constexpr Eigen::Index n = 100000;
  RandomStream stream(seed, 0xA0);
  const ChannelVector g = sample_channel(ctx.link_sr, n, stream);
  const double mu = ctx.link_sr.los_mean;
  const double eta = ctx.link_sr.scatter_var;

  const Complex mean = g.mean();
  const double mean_err = std::abs(mean - Complex(mu, 0.0));
  const double mean_tol = 4.0 * std::sqrt(eta / static_cast<double>(n));

  const double var_re = (g.real().array() - mu).square().mean();
  const double var_im = g.imag().array().square().mean();
  const double var = var_re + var_im;

  const bool ok = mean_err <= mean_tol && std::abs(var - eta) <= 0.05 * eta &&
                  std::abs(var_re - 0.5 * eta) <= 0.05 * eta &&
                  std::abs(var_im - 0.5 * eta) <= 0.05 * eta;
  std::ostringstream detail;
  detail << "mean err " << format_g17(mean_err) << " (tol " << format_g17(mean_tol)
         << "), var " << format_g17(var) << " vs eta " << format_g17(eta);
  h.check("sampler_moments", ok, detail.str());
}

void check_ci_calibration(Harness& h, std::uint64_t seed) {
  constexpr int reps = 1000;
  constexpr int n = 1000;
  int covered = 0;
  for (int r = 0; r < reps; ++r) {
    RandomStream stream(seed, 0xC0000 + static_cast<std::uint64_t>(r));
    std::int64_t successes = 0;
    for (int i = 0; i < n; ++i) {
      successes += stream.uniform(0.0, 1.0) < 0.5 ? 1 : 0;
    }
    const EstimateWithCI est = wilson_interval(successes, n);
    covered += (est.ci_lo <= 0.5 && 0.5 <= est.ci_hi) ? 1 : 0;
  }
  const double coverage = static_cast<double>(covered) / reps;
  h.check("ci_calibration", coverage >= 0.93 && coverage <= 0.97,
          "coverage " + format_g17(coverage));
}

bool estimates_identical(const SecrecyEstimate& a, const SecrecyEstimate& b) {
  if (a.sop.size() != b.sop.size()) return false;
  const auto same = [](const EstimateWithCI& x, const EstimateWithCI& y) {
    return x.mean == y.mean && x.ci_lo == y.ci_lo && x.ci_hi == y.ci_hi &&
           x.trials == y.trials;
  };
  for (std::size_t i = 0; i < a.sop.size(); ++i) {
    if (!same(a.sop[i], b.sop[i])) return false;
  }
  return same(a.sr, b.sr);
}

void check_determinism(Harness& h, std::uint64_t seed) {
  ScenarioConfig config;
  config.k_elems = 16;
  config.rates = {0.0, 1.0, 2.0};
  const ScenarioContext ctx(config);

  RandomStream s1(seed, 7);
  RandomStream s2(seed, 7);
  const ChannelVector g1 = sample_channel(ctx.link_sr, 32, s1);
  const ChannelVector g2 = sample_channel(ctx.link_sr, 32, s2);
  bool ok = (g1.array() == g2.array()).all();

  const SecrecyEstimate serial = estimate(ctx, Scheme::opt, 400, seed, 1);
  const SecrecyEstimate parallel = estimate(ctx, Scheme::opt, 400, seed, 4);
  const SecrecyEstimate repeated = estimate(ctx, Scheme::opt, 400, seed, 3);
  ok = ok && estimates_identical(serial, parallel) &&
       estimates_identical(serial, repeated);
  h.check("determinism", ok,
          ok ? "" : "results differ across repeats or worker counts");
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validation(int levels, std::int64_t trials,
                                std::uint64_t seed) {
  ValidationReport report;
  Harness h(report);
  const ScenarioContext ctx = default_context();

  const std::int64_t cancellation_reals = std::max<std::int64_t>(trials / 10, 50);
  const std::int64_t grid_reals = std::max<std::int64_t>(trials / 50, 20);

  check_pair_cancellation(h, ctx, cancellation_reals, seed);
  check_sandwich(h, ctx, cancellation_reals, derive_seed(seed, 1));
  check_grid_oracle(h, ctx, levels, grid_reals, derive_seed(seed, 2));
  check_sampler_moments(h, ctx, derive_seed(seed, 3));
  check_ci_calibration(h, derive_seed(seed, 4));
  check_determinism(h, derive_seed(seed, 5));
  return report;
}

ValidationReport run_selftest() {
  ValidationReport report;
  Harness h(report);

  // geometry
  h.check_eq("distance_identity", distance({0, 0}, {0, 0}), 0.0);
  h.check_near("distance_diag", distance({0, 0}, {10, 10}),
               14.142135623730951, 1e-12);
  h.check_near("distance_offset", distance({10, 10}, {70, 0}),
               60.827625302982199, 1e-12);

  // path loss
  RadioParams radio;
  h.check_near("pathloss_constant", pathloss_constant(radio.carrier_freq_hz),
               7737.7698504540567, 1e-8);
  h.check_near("pathloss_at_zero", path_loss(0.0, radio), 7737.7698504540567,
               1e-8);
  h.check_near("pathloss_sr", path_loss(14.142135623730951, radio),
               8.6725732925365797, 1e-10);
  RadioParams inverse = radio;
  inverse.pathloss_convention = PathLossConvention::inverse;
  h.check_near("pathloss_inverse_at_zero", path_loss(0.0, inverse),
               1.0 / 7737.7698504540567, 1e-16);
  bool rejected = false;
  try {
    path_loss(std::numeric_limits<double>::quiet_NaN(), radio);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  h.check("pathloss_rejects_nan", rejected);

  // noise budget
  RadioParams floor_params;
  floor_params.noise_figure_db = 0.0;
  floor_params.bandwidth_hz = 1.0;
  h.check_near("noise_floor", noise_power_dbm(floor_params), -174.0, 1e-12);
  h.check_near("noise_default_dbm", noise_power_dbm(radio), -98.0, 1e-12);
  h.check_near("noise_default_watts", noise_power_watts(radio),
               1.5848931924611109e-13, 1e-26);
  RadioParams narrow = radio;
  narrow.bandwidth_hz = 1e6;
  h.check_near("noise_narrow_dbm", noise_power_dbm(narrow), -108.0, 1e-12);

  // link budgets
  const LinkBudget rayleigh = make_link({0, 0}, {10, 10}, 0.0, radio);
  h.check_eq("link_rayleigh_mu", rayleigh.los_mean, 0.0);
  const LinkBudget sr = make_link({0, 0}, {10, 10}, 3.0, radio);
  h.check_near("link_sr_mu", sr.los_mean, 5.100756794595263, 1e-10);
  h.check_near("link_sr_eta", sr.scatter_var, 8.6725732925365797, 1e-10);

  // degenerate sampler
  LinkBudget frozen;
  frozen.los_mean = 2.5;
  frozen.scatter_var = 0.0;
  RandomStream stream(1, 1);
  const ChannelVector g0 = sample_channel(frozen, 4, stream);
  h.check("sampler_degenerate",
          (g0.array() == Complex(2.5, 0.0)).all());

  // cascade
  ChannelVector one(1), other(1);
  one << Complex(1, 0);
  other << Complex(1, 0);
  PhaseVector zero = PhaseVector::Zero(1);
  PhaseVector pi_shift(1);
  pi_shift << kPi;
  h.check_near("cascade_identity", std::abs(cascade(one, zero, other) - Complex(1, 0)),
               0.0, 1e-15);
  h.check_near("cascade_half_turn",
               std::abs(cascade(one, pi_shift, other) - Complex(-1, 0)), 0.0,
               1e-15);

  // heuristic
  ChannelVector unit2(2);
  unit2 << Complex(1, 0), Complex(1, 0);
  h.check_near("heuristic_pair_cancels",
               std::abs(cascade(unit2, heuristic_min_eve(unit2, unit2), unit2)),
               0.0, 1e-12);
  ChannelVector g_a(2), g_b(2);
  g_a << std::polar(3.0, 0.7), std::polar(1.0, -0.3);
  g_b << std::polar(1.0, 1.1), std::polar(1.0, 2.0);
  h.check_near("heuristic_gap",
               std::abs(cascade(g_a, heuristic_min_eve(g_a, g_b), g_b)), 2.0,
               1e-12);
  ChannelVector unit3(3);
  unit3 << Complex(1, 0), Complex(1, 0), Complex(1, 0);
  h.check_near("heuristic_leftover",
               std::abs(cascade(unit3, heuristic_min_eve(unit3, unit3), unit3)),
               1.0, 1e-12);

  // random phases
  RandomStream pstream(3, 9);
  const PhaseVector drawn = random_phases(64, pstream);
  RandomStream pstream2(3, 9);
  const PhaseVector drawn2 = random_phases(64, pstream2);
  h.check("random_phases_reproducible", (drawn.array() == drawn2.array()).all());
  h.check("random_phases_range",
          (drawn.array() >= -kPi).all() && (drawn.array() <= kPi).all());

  // max_main
  ChannelVector two(2), weights(2);
  two << Complex(1, 0), Complex(2, 0);
  weights << Complex(1, 0), Complex(1, 0);
  h.check_eq("max_main_zero", max_main_phases(one, other)[0], 0.0);
  h.check_near("max_main_coherent",
               std::abs(cascade(two, max_main_phases(two, weights), weights)),
               3.0, 1e-12);

  // bounds
  AmplitudeVector closable(3);
  closable << 1, 1, 1;
  h.check_eq("lower_bound_closable", eve_lower_bound(closable), 0.0);
  AmplitudeVector dominant(3);
  dominant << 5, 1, 1;
  h.check_eq("lower_bound_dominant", eve_lower_bound(dominant), 3.0);
  AmplitudeVector single(1);
  single << 0.75;
  h.check_eq("lower_bound_single", eve_lower_bound(single), 0.75);

  // grid oracle
  ChannelVector ga1(1), gb1(1);
  ga1 << std::polar(1.5, 0.4);
  gb1 << std::polar(2.0, -1.2);
  h.check_near("grid_k1_invariant", grid_oracle_min(ga1, gb1, 8).value, 3.0,
               1e-12);
  h.check("grid_k2_quantization",
          grid_oracle_min(unit2, unit2, 64).value <= 0.09813534865483603 + 1e-12);

  // secrecy quantities
  h.check_eq("snr_zero_cascade", snr(1.0, Complex(0, 0), 1.0), 0.0);
  h.check_eq("snr_identity", snr(1.0, Complex(1, 0), 1.0), 1.0);
  h.check_near("snr_budget", snr(0.1, Complex(1e-5, 0), 1.584893192461111e-13),
               63.095734448019435, 1e-9);
  h.check_eq("sr_symmetric", secrecy_rate_sample({2.0, 2.0}), 0.0);
  h.check_near("sr_ratio", secrecy_rate_sample({3.0, 1.0}), 1.0, 1e-15);
  h.check_eq("sr_clamped", secrecy_rate_sample({0.0, 10.0}), 0.0);
  h.check("sop_boundary_zero", sop_indicator({2.0, 2.0}, 0.0));
  h.check("sop_boundary_rate", sop_indicator({3.0, 1.0}, 1.0));
  h.check("sop_below_rate", !sop_indicator({3.0, 1.0}, 0.5));

  // wrap
  h.check_eq("wrap_pi", wrap_angle(kPi), kPi);
  h.check_eq("wrap_neg_pi", wrap_angle(-kPi), -kPi);
  h.check_near("wrap_three_pi", std::abs(wrap_angle(3.0 * kPi)), kPi, 1e-15);

  // estimator degenerate cases
  ScenarioConfig degenerate;
  degenerate.k_elems = 2;
  degenerate.rates = {100.0};
  degenerate.trials = 32;
  const SecrecyEstimate est = estimate(degenerate, Scheme::ran, 32, 5);
  h.check_eq("estimate_all_outage", est.sop[0].mean, 1.0);
  const SecrecyEstimate single_trial = estimate(degenerate, Scheme::ran, 1, 5);
  h.check("estimate_single_trial_sentinel",
          std::isinf(single_trial.sr.ci_hi) && std::isinf(single_trial.sr.ci_lo));

  return report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
  for (const CheckResult& check : report.checks) {
    out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.detail.empty()) {
      out << " - " << check.detail;
    }
    out << '\n';
  }
  std::size_t failed = 0;
  for (const CheckResult& check : report.checks) {
    failed += check.passed ? 0 : 1;
  }
  out << report.checks.size() - failed << '/' << report.checks.size()
      << " checks passed\n";
}

}  // namespace rissec
