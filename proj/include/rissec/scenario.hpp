// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rissec/channel.hpp"

namespace rissec {

enum class Scheme { opt, ran, max_main };

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full experiment description. Defaults describe the reference deployment:
/// source at the origin, surface at (10,10), destination at (70,0),
/// eavesdropper at (70,-10), 144 elements, 2.1 GHz / 10 MHz / NF 6 dB radio
/// at 20 dBm, beta = -2.5, Rician factors 3 / 0.5 / 1.25.
struct ScenarioConfig {
  Position2D source{0.0, 0.0};
  Position2D ris{10.0, 10.0};
  Position2D destination{70.0, 0.0};
  Position2D eavesdropper{70.0, -10.0};
  Eigen::Index k_elems = 144;
  double k_sr = 3.0;
  double k_rd = 0.5;
  double k_re = 1.25;
  RadioParams radio{};
  std::vector<double> rates{1.0};  // target secrecy rates, bits/s/Hz
  std::int64_t trials = 10000;
  std::uint64_t master_seed = 1;
  std::vector<Scheme> schemes{Scheme::opt, Scheme::ran};
};

/// Throws ConfigError naming the offending key on any domain violation.
void validate_scenario(const ScenarioConfig& config);

/// Parses a flat `key = value` document ('#' comments). Absent keys keep
/// their defaults; unknown keys and malformed lines are rejected with
/// line diagnostics.
ScenarioConfig load_config(std::string_view text);
ScenarioConfig load_config_file(const std::string& path);

/// Applies one `key=value` override in the config-file key space.
void apply_override(ScenarioConfig& config, std::string_view assignment);

/// Scenario state precomputed once per run: link budgets and the radio
/// budget converted to linear units so the trial loop never touches dB.
struct ScenarioContext {
  explicit ScenarioContext(const ScenarioConfig& cfg);

  ScenarioConfig config;
  LinkBudget link_sr;
  LinkBudget link_rd;
  LinkBudget link_re;
  double ptx_watts = 0.0;
  double noise_watts = 0.0;
};

}  // namespace rissec
