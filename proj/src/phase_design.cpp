// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include "rissec/phase_design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace rissec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double wrap_angle(double radians) {
  // remainder() rounds half to even, so +pi stays +pi.
  return std::remainder(radians, kTwoPi);
}

namespace detail {
void check_cascade_sizes(Eigen::Index a, Eigen::Index p, Eigen::Index b) {
  if (a != p || b != p) {
    throw std::invalid_argument("cascade: channel/phase length mismatch");
  }
}
}  // namespace detail

AmplitudeVector amplitude_profile(const ChannelVector& g_a,
                                  const ChannelVector& g_b) {
  detail::check_cascade_sizes(g_a.size(), g_a.size(), g_b.size());
  return g_a.cwiseAbs().cwiseProduct(g_b.cwiseAbs());
}

PairingPlan make_pairing(const AmplitudeVector& amplitudes) {
  PairingPlan plan;
  plan.ordering.resize(static_cast<std::size_t>(amplitudes.size()));
  std::iota(plan.ordering.begin(), plan.ordering.end(), Eigen::Index{0});
  // Descending amplitude; ties by ascending original index (stable iota).
  std::stable_sort(plan.ordering.begin(), plan.ordering.end(),
                   [&](Eigen::Index lhs, Eigen::Index rhs) {
                     return amplitudes[lhs] > amplitudes[rhs];
                   });
  const std::size_t n_pairs = plan.ordering.size() / 2;
  plan.pairs.reserve(n_pairs);
  for (std::size_t n = 0; n < n_pairs; ++n) {
    plan.pairs.emplace_back(plan.ordering[2 * n], plan.ordering[2 * n + 1]);
  }
  if (plan.ordering.size() % 2 != 0) {
    plan.leftover = plan.ordering.back();
  }
  return plan;
}

PhaseVector heuristic_min_eve(const ChannelVector& g_sr,
                              const ChannelVector& g_re) {
  detail::check_cascade_sizes(g_sr.size(), g_sr.size(), g_re.size());
  if (g_sr.size() < 1) {
    throw std::invalid_argument("heuristic_min_eve: empty channel");
  }
  const AmplitudeVector amps = amplitude_profile(g_sr, g_re);
  const PairingPlan plan = make_pairing(amps);

  // Cascade-term phase at w = 0: -arg(g_sr,k) + arg(g_re,k).
  PhaseVector omega = PhaseVector::Zero(g_sr.size());
  for (const auto& [larger, smaller] : plan.pairs) {
    const double psi_larger = std::arg(g_re[larger]) - std::arg(g_sr[larger]);
    const double psi_smaller = std::arg(g_re[smaller]) - std::arg(g_sr[smaller]);
    // Smaller partner keeps w = 0; the larger absorbs the pi offset so the
    // two terms oppose exactly.
    omega[larger] = wrap_angle(kPi + psi_smaller - psi_larger);
  }
  return omega;
}

PhaseVector random_phases(Eigen::Index k_elems, RandomStream& stream) {
  if (k_elems < 1) {
    throw std::invalid_argument("random_phases: need at least one element");
  }
  PhaseVector omega(k_elems);
  for (Eigen::Index k = 0; k < k_elems; ++k) {
    omega[k] = stream.uniform(-kPi, kPi);
  }
  return omega;
}

PhaseVector max_main_phases(const ChannelVector& g_sr,
                            const ChannelVector& g_rd) {
  detail::check_cascade_sizes(g_sr.size(), g_sr.size(), g_rd.size());
  PhaseVector omega(g_sr.size());
  for (Eigen::Index k = 0; k < g_sr.size(); ++k) {
    omega[k] = wrap_angle(std::arg(g_sr[k]) - std::arg(g_rd[k]));
  }
  return omega;
}

double eve_lower_bound(const AmplitudeVector& amplitudes) {
  if (amplitudes.size() == 0) {
    return 0.0;
  }
  return std::max(0.0, 2.0 * amplitudes.maxCoeff() - amplitudes.sum());
}

double pairing_residual_bound(const AmplitudeVector& amplitudes) {
  const PairingPlan plan = make_pairing(amplitudes);
  double bound = 0.0;
  for (const auto& [larger, smaller] : plan.pairs) {
    bound += amplitudes[larger] - amplitudes[smaller];
  }
  if (plan.leftover) {
    bound += amplitudes[*plan.leftover];
  }
  return bound;
}

double pair_opposition_residual(const ChannelVector& g_sr,
                                const ChannelVector& g_re,
                                const PhaseVector& phases) {
  detail::check_cascade_sizes(g_sr.size(), phases.size(), g_re.size());
  const PairingPlan plan = make_pairing(amplitude_profile(g_sr, g_re));
  double worst = 0.0;
  for (const auto& [larger, smaller] : plan.pairs) {
    const auto term_phase = [&](Eigen::Index k) {
      return -std::arg(g_sr[k]) + phases[k] + std::arg(g_re[k]);
    };
    const double delta = term_phase(larger) - term_phase(smaller);
    worst = std::max(worst, std::abs(wrap_angle(delta - kPi)));
  }
  return worst;
}

GridSearchResult grid_oracle_min(const ChannelVector& g_sr,
                                 const ChannelVector& g_re, int levels) {
  detail::check_cascade_sizes(g_sr.size(), g_sr.size(), g_re.size());
  const Eigen::Index k_elems = g_sr.size();
  if (k_elems < 1 || k_elems > 8) {
    throw std::invalid_argument("grid_oracle_min: element count must be in [1, 8]");
  }
  if (levels < 2) {
    throw std::invalid_argument("grid_oracle_min: need at least 2 levels");
  }

  // Terms t_k(m) = conj(g_sr,k) e^{j w_m} g_re,k for every grid phase.
  Eigen::MatrixXcd terms(levels, k_elems);
  PhaseVector grid(levels);
  for (int m = 0; m < levels; ++m) {
    grid[m] = -kPi + kTwoPi * m / levels;
  }
  for (Eigen::Index k = 0; k < k_elems; ++k) {
    const Complex base = std::conj(g_sr[k]) * g_re[k];
    for (int m = 0; m < levels; ++m) {
      terms(m, k) = base * std::polar(1.0, grid[m]);
    }
  }

  std::vector<int> cursor(static_cast<std::size_t>(k_elems), 0);
  std::vector<int> best(cursor);
  double best_value = std::numeric_limits<double>::infinity();

  // Depth-first walk with running partial sums; ties keep the first
  // configuration in lexicographic grid order.
  auto search = [&](auto&& self, Eigen::Index depth, Complex acc) -> void {
    if (depth == k_elems) {
      const double value = std::abs(acc);
      if (value < best_value) {
        best_value = value;
        best = cursor;
      }
      return;
    }
    for (int m = 0; m < levels; ++m) {
      cursor[static_cast<std::size_t>(depth)] = m;
      self(self, depth + 1, acc + terms(m, depth));
    }
  };
  search(search, 0, Complex{0.0, 0.0});

  GridSearchResult result;
  result.phases.resize(k_elems);
  for (Eigen::Index k = 0; k < k_elems; ++k) {
    result.phases[k] = grid[best[static_cast<std::size_t>(k)]];
  }
  result.value = best_value;
  return result;
}

}  // namespace rissec
