// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>

namespace rissec {

using Complex = std::complex<double>;

/// One hop's small-scale fading coefficients, one complex entry per
/// reflecting element.
using ChannelVector = Eigen::VectorXcd;

/// Per-element phase shifts in [-pi, pi].
using PhaseVector = Eigen::VectorXd;

using AmplitudeVector = Eigen::VectorXd;

}  // namespace rissec
