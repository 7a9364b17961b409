// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rissec/random.hpp"
#include "rissec/types.hpp"

namespace rissec {

/// Wraps an angle into [-pi, pi]; +pi maps to +pi (round-half-even, i.e.
/// std::remainder semantics).
double wrap_angle(double radians);

namespace detail {
void check_cascade_sizes(Eigen::Index a, Eigen::Index p, Eigen::Index b);
}

/// Composite reflected-path amplitude  g_a^H diag(e^{j w_1},...,e^{j w_K}) g_b
/// = sum_k conj(g_a,k) e^{j w_k} g_b,k.  Accepts any Eigen vector expressions
/// of equal length.
template <typename DerivedA, typename DerivedP, typename DerivedB>
Complex cascade(const Eigen::MatrixBase<DerivedA>& g_a,
                const Eigen::MatrixBase<DerivedP>& phases,
                const Eigen::MatrixBase<DerivedB>& g_b) {
  detail::check_cascade_sizes(g_a.size(), phases.size(), g_b.size());
  const auto phasor = phases.derived().unaryExpr(
      [](double w) { return std::polar(1.0, w); });
  return g_a.derived()
      .conjugate()
      .cwiseProduct(phasor)
      .cwiseProduct(g_b.derived())
      .sum();
}

/// Per-element cascade-term magnitudes a_k = |g_a,k| * |g_b,k|.
AmplitudeVector amplitude_profile(const ChannelVector& g_a,
                                  const ChannelVector& g_b);

/// Descending-amplitude ordering split into adjacent pairs. `pairs` holds
/// original indices as (larger, smaller); an odd element count leaves one
/// `leftover` index. Ties sort by ascending original index.
struct PairingPlan {
  std::vector<Eigen::Index> ordering;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  std::optional<Eigen::Index> leftover;
};

PairingPlan make_pairing(const AmplitudeVector& amplitudes);

/*
 * Eavesdropper-suppressing phase design.
 *
 * Sorts the cascade-term magnitudes |g_sr,k||g_re,k| in descending order,
 * pairs adjacent entries, and phases each pair so its two cascade terms are
 * exactly pi out of phase, cancelling up to the amplitude gap. Within a
 * pair the smaller-amplitude element keeps w = 0 and the larger one absorbs
 * the pi offset; an odd leftover element gets w = 0. The resulting |cascade|
 * toward the eavesdropper is bounded by the sum of pair gaps plus the
 * leftover amplitude.
 */
PhaseVector heuristic_min_eve(const ChannelVector& g_sr,
                              const ChannelVector& g_re);

/// i.i.d. uniform phases on [-pi, pi].
PhaseVector random_phases(Eigen::Index k_elems, RandomStream& stream);

/// Co-phases every cascade term toward the destination:
/// w_k = wrap(arg(g_sr,k) - arg(g_rd,k)), making |cascade| = sum_k a_k.
PhaseVector max_main_phases(const ChannelVector& g_sr,
                            const ChannelVector& g_rd);

/// Certified floor for the reachable |cascade| over all phase choices:
/// max(0, 2 max_k a_k - sum_k a_k)  (polygon inequality).
double eve_lower_bound(const AmplitudeVector& amplitudes);

/// Upper bound attained by the pairing heuristic: sum of within-pair
/// amplitude gaps plus the leftover amplitude.
double pairing_residual_bound(const AmplitudeVector& amplitudes);

/// Largest deviation, over the pairing implied by (g_sr, g_re), of the two
/// within-pair cascade-term phases from exact pi opposition. Zero (up to
/// rounding) for phases produced by heuristic_min_eve.
double pair_opposition_residual(const ChannelVector& g_sr,
                                const ChannelVector& g_re,
                                const PhaseVector& phases);

struct GridSearchResult {
  PhaseVector phases;
  double value = 0.0;  // minimal |cascade|
};

/// Exhaustive minimization of |cascade(g_sr, ., g_re)| over the uniform
/// phase grid {-pi + 2 pi m / levels}. Cost is levels^K; K is capped at 8.
GridSearchResult grid_oracle_min(const ChannelVector& g_sr,
                                 const ChannelVector& g_re, int levels);

}  // namespace rissec
