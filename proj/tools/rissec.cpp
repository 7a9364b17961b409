// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-scenario runs, parameter sweeps, the
// invariant validation suite and a fixed-value selftest.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rissec/scenario.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/sweep.hpp"
#include "rissec/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> schemes;
  std::string out_path;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Scenario config file");
  cmd->add_option("--set", opts.overrides, "Override key=value (repeatable)");
  cmd->add_option("--trials", opts.trials, "Monte-Carlo trials per cell");
  cmd->add_option("--seed", opts.seed, "Master seed");
  cmd->add_option("--scheme", opts.schemes,
                  "Phase design: opt|ran|max_main (repeatable)");
  cmd->add_option("--out", opts.out_path, "Output path (default stdout)");
  cmd->add_option("--workers", opts.workers, "Worker threads (speed only)")
      ->check(CLI::PositiveNumber);
}

rissec::ScenarioConfig build_scenario(const CommonOptions& opts) {
  rissec::ScenarioConfig config = opts.config_path.empty()
                                      ? rissec::ScenarioConfig{}
                                      : rissec::load_config_file(opts.config_path);
  for (const std::string& assignment : opts.overrides) {
    rissec::apply_override(config, assignment);
  }
  if (opts.trials) {
    config.trials = *opts.trials;
  }
  if (opts.seed) {
    config.master_seed = *opts.seed;
  }
  if (!opts.schemes.empty()) {
    config.schemes.clear();
    for (const std::string& name : opts.schemes) {
      config.schemes.push_back(rissec::parse_scheme(name));
    }
  }
  rissec::validate_scenario(config);
  return config;
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw rissec::ConfigError("cannot open output file '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_run(const CommonOptions& opts) {
  const rissec::ScenarioConfig config = build_scenario(opts);
  const rissec::ScenarioContext ctx(config);
  OutputSink sink(opts.out_path);
  std::ostream& out = sink.stream();

  out << rissec::kCsvHeader << '\n';
  for (std::size_t s = 0; s < config.schemes.size(); ++s) {
    const rissec::SecrecyEstimate est =
        rissec::estimate(ctx, config.schemes[s], config.trials,
                         config.master_seed, opts.workers);
    for (std::size_t r = 0; r < config.rates.size(); ++r) {
      out << "none,0," << rissec::scheme_name(config.schemes[s]) << ','
          << rissec::format_g17(config.rates[r]) << ','
          << rissec::format_g17(est.sop[r].mean) << ','
          << rissec::format_g17(est.sop[r].ci_lo) << ','
          << rissec::format_g17(est.sop[r].ci_hi) << ','
          << rissec::format_g17(est.sr.mean) << ','
          << rissec::format_g17(est.sr.ci_lo) << ','
          << rissec::format_g17(est.sr.ci_hi) << ',' << config.trials << ','
          << config.master_seed << '\n';
    }
  }
  out.flush();
  if (!out) {
    std::cerr << "error: failed to write output\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_sweep(const CommonOptions& opts, const std::string& variable,
              const std::string& values) {
  rissec::SweepSpec spec;
  spec.variable = rissec::parse_sweep_variable(variable);
  spec.values = rissec::parse_value_list(values);
  spec.base = build_scenario(opts);

  OutputSink sink(opts.out_path);
  const rissec::SweepSummary summary =
      rissec::run_sweep(spec, sink.stream(), opts.workers);
  std::cerr << "sweep: " << summary.cells << " cells, " << summary.rows
            << " rows\n";
  return kExitOk;
}

int cmd_validate(int levels, std::int64_t trials, std::uint64_t seed) {
  const rissec::ValidationReport report =
      rissec::run_validation(levels, trials, seed);
  rissec::print_report(report, std::cout);
  return report.all_passed() ? kExitOk : kExitValidation;
}

int cmd_selftest() {
  const rissec::ValidationReport report = rissec::run_selftest();
  rissec::print_report(report, std::cout);
  return report.all_passed() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS-assisted wiretap link: secrecy outage and secrecy rate "
               "Monte-Carlo simulator"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "Estimate one scenario");
  add_common(run, run_opts);

  CommonOptions sweep_opts;
  std::string sweep_variable;
  std::string sweep_values;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one variable");
  add_common(sweep, sweep_opts);
  sweep->add_option("--var", sweep_variable,
                    "Swept variable: rate|ptx_dbm|k_elems|k_sr|k_rd|k_re")
      ->required();
  sweep->add_option("--values", sweep_values,
                    "Comma list (0,0.5,1) or range lo:hi:step")
      ->required();

  int validate_levels = 16;
  std::int64_t validate_trials = 2000;
  std::uint64_t validate_seed = 1;
  CLI::App* validate = app.add_subcommand("validate", "Run the invariant suite");
  validate->add_option("--levels", validate_levels, "Grid-oracle levels")
      ->check(CLI::Range(2, 64));
  validate->add_option("--trials", validate_trials, "Statistical check scale");
  validate->add_option("--seed", validate_seed, "Suite seed");

  app.add_subcommand("selftest", "Run fixed-value smoke checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(run_opts);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_opts, sweep_variable, sweep_values);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_levels, validate_trials, validate_seed);
    }
    return cmd_selftest();
  } catch (const rissec::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
