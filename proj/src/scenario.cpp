// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include "rissec/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rissec {

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::opt:
      return "opt";
    case Scheme::ran:
      return "ran";
    case Scheme::max_main:
      return "max_main";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "opt") return Scheme::opt;
  if (name == "ran") return Scheme::ran;
  if (name == "max_main") return Scheme::max_main;
  throw ConfigError("unknown scheme '" + std::string(name) +
                    "' (expected opt|ran|max_main)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) {
      break;
    }
    s.remove_prefix(pos + 1);
  }
  return parts;
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(trim(value));
  std::size_t used = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + std::string(key) + "': cannot parse number '" +
                      text + "'");
  }
  if (used != text.size()) {
    throw ConfigError("key '" + std::string(key) + "': trailing characters in '" +
                      text + "'");
  }
  return parsed;
}

std::int64_t parse_int(std::string_view key, std::string_view value) {
  const std::string_view text = trim(value);
  std::int64_t parsed = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + std::string(key) + "': cannot parse integer '" +
                      std::string(text) + "'");
  }
  return parsed;
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  const std::string_view text = trim(value);
  std::uint64_t parsed = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + std::string(key) +
                      "': cannot parse unsigned integer '" + std::string(text) +
                      "'");
  }
  return parsed;
}

void assign(ScenarioConfig& config, std::string_view key,
            std::string_view value) {
  if (key == "s_x") {
    config.source.x = parse_double(key, value);
  } else if (key == "s_y") {
    config.source.y = parse_double(key, value);
  } else if (key == "ris_x") {
    config.ris.x = parse_double(key, value);
  } else if (key == "ris_y") {
    config.ris.y = parse_double(key, value);
  } else if (key == "d_x") {
    config.destination.x = parse_double(key, value);
  } else if (key == "d_y") {
    config.destination.y = parse_double(key, value);
  } else if (key == "e_x") {
    config.eavesdropper.x = parse_double(key, value);
  } else if (key == "e_y") {
    config.eavesdropper.y = parse_double(key, value);
  } else if (key == "k_elems") {
    config.k_elems = static_cast<Eigen::Index>(parse_int(key, value));
  } else if (key == "k_sr") {
    config.k_sr = parse_double(key, value);
  } else if (key == "k_rd") {
    config.k_rd = parse_double(key, value);
  } else if (key == "k_re") {
    config.k_re = parse_double(key, value);
  } else if (key == "fc_hz") {
    config.radio.carrier_freq_hz = parse_double(key, value);
  } else if (key == "bw_hz") {
    config.radio.bandwidth_hz = parse_double(key, value);
  } else if (key == "nf_db") {
    config.radio.noise_figure_db = parse_double(key, value);
  } else if (key == "beta") {
    config.radio.pathloss_exponent = parse_double(key, value);
  } else if (key == "ptx_dbm") {
    config.radio.tx_power_dbm = parse_double(key, value);
  } else if (key == "pathloss_convention") {
    const std::string_view text = trim(value);
    if (text == "paper") {
      config.radio.pathloss_convention = PathLossConvention::paper;
    } else if (text == "inverse") {
      config.radio.pathloss_convention = PathLossConvention::inverse;
    } else {
      throw ConfigError("key 'pathloss_convention': expected paper|inverse, got '" +
                        std::string(text) + "'");
    }
  } else if (key == "rates") {
    config.rates.clear();
    for (const auto part : split(value, ',')) {
      config.rates.push_back(parse_double(key, part));
    }
  } else if (key == "trials") {
    config.trials = parse_int(key, value);
  } else if (key == "master_seed") {
    config.master_seed = parse_uint(key, value);
  } else if (key == "schemes") {
    config.schemes.clear();
    for (const auto part : split(value, ',')) {
      config.schemes.push_back(parse_scheme(part));
    }
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void require(bool condition, const char* message) {
  if (!condition) {
    throw ConfigError(message);
  }
}

}  // namespace

void validate_scenario(const ScenarioConfig& config) {
  const auto finite = [](Position2D p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
  };
  require(finite(config.source), "key 's_x/s_y': coordinates must be finite");
  require(finite(config.ris), "key 'ris_x/ris_y': coordinates must be finite");
  require(finite(config.destination), "key 'd_x/d_y': coordinates must be finite");
  require(finite(config.eavesdropper), "key 'e_x/e_y': coordinates must be finite");
  require(config.k_elems >= 1, "key 'k_elems': need at least one element");
  require(config.k_sr >= 0.0, "key 'k_sr': Rician factor must be >= 0");
  require(config.k_rd >= 0.0, "key 'k_rd': Rician factor must be >= 0");
  require(config.k_re >= 0.0, "key 'k_re': Rician factor must be >= 0");
  require(config.radio.carrier_freq_hz > 0.0, "key 'fc_hz': must be > 0");
  require(config.radio.bandwidth_hz > 0.0, "key 'bw_hz': must be > 0");
  require(std::isfinite(config.radio.tx_power_dbm), "key 'ptx_dbm': must be finite");
  require(std::isfinite(config.radio.noise_figure_db), "key 'nf_db': must be finite");
  require(std::isfinite(config.radio.pathloss_exponent), "key 'beta': must be finite");
  require(!config.rates.empty(), "key 'rates': need at least one target rate");
  for (const double rate : config.rates) {
    require(std::isfinite(rate) && rate >= 0.0, "key 'rates': rates must be >= 0");
  }
  require(config.trials >= 1, "key 'trials': need at least one trial");
  require(!config.schemes.empty(), "key 'schemes': need at least one scheme");
}

ScenarioConfig load_config(std::string_view text) {
  ScenarioConfig config;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + std::string(line) +
                        "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    try {
      assign(config, key, value);
    } catch (const ConfigError& err) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  validate_scenario(config);
  return config;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

void apply_override(ScenarioConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) +
                      "': expected key=value");
  }
  const std::string_view key = trim(assignment.substr(0, eq));
  const std::string_view value = trim(assignment.substr(eq + 1));
  assign(config, key, value);
}

ScenarioContext::ScenarioContext(const ScenarioConfig& cfg) : config(cfg) {
  validate_scenario(config);
  link_sr = make_link(config.source, config.ris, config.k_sr, config.radio);
  link_rd = make_link(config.ris, config.destination, config.k_rd, config.radio);
  link_re = make_link(config.ris, config.eavesdropper, config.k_re, config.radio);
  ptx_watts = dbm_to_watts(config.radio.tx_power_dbm);
  noise_watts = noise_power_watts(config.radio);
}

}  // namespace rissec
