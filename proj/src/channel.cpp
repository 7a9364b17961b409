// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include "rissec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rissec {

double distance(Position2D p, Position2D q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double pathloss_constant(double carrier_freq_hz) {
  const double k = 4.0 * std::numbers::pi * carrier_freq_hz / kSpeedOfLight;
  return k * k;
}

double path_loss(double distance_m, const RadioParams& params) {
  if (!std::isfinite(distance_m) || distance_m < 0.0) {
    throw std::invalid_argument("path_loss: distance must be finite and >= 0");
  }
  const double bounded = std::pow(1.0 + distance_m, params.pathloss_exponent);
  const double k0 = pathloss_constant(params.carrier_freq_hz);
  return params.pathloss_convention == PathLossConvention::paper
             ? k0 * bounded
             : bounded / k0;
}

double noise_power_dbm(const RadioParams& params) {
  return -174.0 + params.noise_figure_db + 10.0 * std::log10(params.bandwidth_hz);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double noise_power_watts(const RadioParams& params) {
  return dbm_to_watts(noise_power_dbm(params));
}

LinkBudget make_link(Position2D u, Position2D v, double k_factor,
                     const RadioParams& params) {
  if (k_factor < 0.0) {
    throw std::invalid_argument("make_link: Rician factor must be >= 0");
  }
  LinkBudget link;
  link.distance = distance(u, v);
  link.pathloss = path_loss(link.distance, params);
  link.rician_factor = k_factor;
  link.los_mean = std::sqrt(k_factor * link.pathloss);
  link.scatter_var = link.pathloss;
  return link;
}

ChannelVector sample_channel(const LinkBudget& link, Eigen::Index k_elems,
                             RandomStream& stream) {
  if (k_elems < 1) {
    throw std::invalid_argument("sample_channel: need at least one element");
  }
  const double sigma = std::sqrt(0.5 * link.scatter_var);
  ChannelVector g(k_elems);
  for (Eigen::Index k = 0; k < k_elems; ++k) {
    const double re = stream.normal();
    const double im = stream.normal();
    g[k] = Complex(link.los_mean + sigma * re, sigma * im);
  }
  return g;
}

}  // namespace rissec
