// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rissec/random.hpp"
#include "rissec/types.hpp"

namespace rissec {

inline constexpr double kSpeedOfLight = 3.0e8;  // m/s

/// How the bounded path-loss factor (1+d)^beta is scaled by the path-loss
/// constant K0 = (4 pi fc / c)^2.
///   paper:   L = K0 * (1+d)^beta   (L acts as a channel power gain)
///   inverse: L = (1+d)^beta / K0   (free-space-style attenuation)
enum class PathLossConvention { paper, inverse };

struct Position2D {
  double x = 0.0;  // m
  double y = 0.0;  // m
};

struct RadioParams {
  double carrier_freq_hz = 2.1e9;
  double bandwidth_hz = 1.0e7;
  double noise_figure_db = 6.0;
  double pathloss_exponent = -2.5;  // signed, used as configured
  double tx_power_dbm = 20.0;
  PathLossConvention pathloss_convention = PathLossConvention::paper;
};

/// Large-scale propagation state of one hop. The Rician moments follow the
/// link's path loss: los_mean = sqrt(K * L), scatter_var = L.
struct LinkBudget {
  double distance = 0.0;       // m
  double pathloss = 0.0;       // L, linear power gain
  double rician_factor = 0.0;  // K (LOS-to-scatter power ratio)
  double los_mean = 0.0;       // mu
  double scatter_var = 0.0;    // eta
};

double distance(Position2D p, Position2D q);

/// K0 = (4 pi fc / c)^2.
double pathloss_constant(double carrier_freq_hz);

/// Bounded path-loss gain at distance d; finite at d = 0. Throws
/// std::invalid_argument for non-finite or negative d.
double path_loss(double distance_m, const RadioParams& params);

/// Thermal noise floor: -174 dBm/Hz + NF + 10 log10(Bw). Identical for
/// every receiver.
double noise_power_dbm(const RadioParams& params);
double noise_power_watts(const RadioParams& params);

double dbm_to_watts(double dbm);

LinkBudget make_link(Position2D u, Position2D v, double k_factor,
                     const RadioParams& params);

/// Draws k_elems i.i.d. coefficients mu + sqrt(eta/2) * (z1 + j z2) with
/// z1, z2 standard normal. Deterministic under a fixed stream.
ChannelVector sample_channel(const LinkBudget& link, Eigen::Index k_elems,
                             RandomStream& stream);

}  // namespace rissec
