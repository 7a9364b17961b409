// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include "rissec/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace rissec {

std::string_view sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::rate:
      return "rate";
    case SweepVariable::ptx_dbm:
      return "ptx_dbm";
    case SweepVariable::k_elems:
      return "k_elems";
    case SweepVariable::k_sr:
      return "k_sr";
    case SweepVariable::k_rd:
      return "k_rd";
    case SweepVariable::k_re:
      return "k_re";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "rate") return SweepVariable::rate;
  if (name == "ptx_dbm") return SweepVariable::ptx_dbm;
  if (name == "k_elems") return SweepVariable::k_elems;
  if (name == "k_sr") return SweepVariable::k_sr;
  if (name == "k_rd") return SweepVariable::k_rd;
  if (name == "k_re") return SweepVariable::k_re;
  throw ConfigError("unknown sweep variable '" + std::string(name) +
                    "' (expected rate|ptx_dbm|k_elems|k_sr|k_rd|k_re)");
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::string_view variable,
                        std::size_t value_index, std::size_t scheme_index) {
  std::uint64_t seed = derive_seed(master_seed, fnv1a(variable));
  seed = derive_seed(seed, static_cast<std::uint64_t>(value_index));
  return derive_seed(seed, static_cast<std::uint64_t>(scheme_index));
}

namespace {

ScenarioConfig scenario_at(const SweepSpec& spec, double value) {
  ScenarioConfig config = spec.base;
  switch (spec.variable) {
    case SweepVariable::rate:
      config.rates = {value};
      break;
    case SweepVariable::ptx_dbm:
      config.radio.tx_power_dbm = value;
      break;
    case SweepVariable::k_elems: {
      const double rounded = std::nearbyint(value);
      if (!(std::abs(value - rounded) < 1e-9) || rounded < 1.0) {
        throw ConfigError("sweep value for 'k_elems' must be a positive integer");
      }
      config.k_elems = static_cast<Eigen::Index>(rounded);
      break;
    }
    case SweepVariable::k_sr:
      config.k_sr = value;
      break;
    case SweepVariable::k_rd:
      config.k_rd = value;
      break;
    case SweepVariable::k_re:
      config.k_re = value;
      break;
  }
  return config;
}

void write_row(std::ostream& out, std::string_view variable, double value,
               Scheme scheme, double rate, const EstimateWithCI& sop,
               const EstimateWithCI& sr, std::int64_t trials,
               std::uint64_t seed) {
  out << variable << ',' << format_g17(value) << ',' << scheme_name(scheme)
      << ',' << format_g17(rate) << ',' << format_g17(sop.mean) << ','
      << format_g17(sop.ci_lo) << ',' << format_g17(sop.ci_hi) << ','
      << format_g17(sr.mean) << ',' << format_g17(sr.ci_lo) << ','
      << format_g17(sr.ci_hi) << ',' << trials << ',' << seed << '\n';
}

}  // namespace

SweepSummary run_sweep(const SweepSpec& spec, std::ostream& out, int workers) {
  if (spec.values.empty()) {
    throw ConfigError("sweep: need at least one value");
  }
  validate_scenario(spec.base);
  const std::string_view variable = sweep_variable_name(spec.variable);
  const std::int64_t trials = spec.base.trials;
  const std::uint64_t master = spec.base.master_seed;

  SweepSummary summary;
  out << kCsvHeader << '\n';

  if (spec.variable == SweepVariable::rate) {
    // One cell per scheme; the swept rates share the cell's trials.
    ScenarioConfig config = spec.base;
    config.rates = spec.values;
    validate_scenario(config);
    const ScenarioContext ctx(config);
    for (std::size_t s = 0; s < config.schemes.size(); ++s) {
      const std::uint64_t seed = cell_seed(master, variable, 0, s);
      const SecrecyEstimate est =
          estimate(ctx, config.schemes[s], trials, seed, workers);
      ++summary.cells;
      for (std::size_t v = 0; v < spec.values.size(); ++v) {
        write_row(out, variable, spec.values[v], config.schemes[s],
                  spec.values[v], est.sop[v], est.sr, trials, seed);
        ++summary.rows;
      }
    }
  } else {
    for (std::size_t v = 0; v < spec.values.size(); ++v) {
      const ScenarioConfig config = scenario_at(spec, spec.values[v]);
      validate_scenario(config);
      const ScenarioContext ctx(config);
      for (std::size_t s = 0; s < config.schemes.size(); ++s) {
        const std::uint64_t seed = cell_seed(master, variable, v, s);
        const SecrecyEstimate est =
            estimate(ctx, config.schemes[s], trials, seed, workers);
        ++summary.cells;
        for (std::size_t r = 0; r < config.rates.size(); ++r) {
          write_row(out, variable, spec.values[v], config.schemes[s],
                    config.rates[r], est.sop[r], est.sr, trials, seed);
          ++summary.rows;
        }
      }
    }
  }

  out.flush();
  if (!out) {
    throw std::runtime_error("sweep: failed to write output");
  }
  return summary;
}

std::vector<double> parse_value_list(std::string_view text) {
  const auto parse_one = [](std::string_view part) {
    const std::string s{part};
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse sweep value '" + s + "'");
    }
    if (used != s.size()) {
      throw ConfigError("cannot parse sweep value '" + s + "'");
    }
    return v;
  };

  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    // lo:hi:step, inclusive of hi up to a half-step slack
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = text.find(':', start);
      parts.push_back(text.substr(start, pos == std::string_view::npos
                                             ? std::string_view::npos
                                             : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3) {
      throw ConfigError("range must be lo:hi:step");
    }
    const double lo = parse_one(parts[0]);
    const double hi = parse_one(parts[1]);
    const double step = parse_one(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw ConfigError("range must satisfy lo <= hi, step > 0");
    }
    const auto count =
        static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::int64_t i = 0; i < count; ++i) {
      const double v = lo + static_cast<double>(i) * step;
      values.push_back(std::min(v, hi));
    }
    return values;
  }

  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const std::string_view part = text.substr(
        start, pos == std::string_view::npos ? std::string_view::npos
                                             : pos - start);
    values.push_back(parse_one(part));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return values;
}

}  // namespace rissec
