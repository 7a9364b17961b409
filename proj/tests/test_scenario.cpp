// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <string>

#include "rissec/scenario.hpp"

using namespace rissec;

TEST_CASE("empty document yields the reference defaults") {
  const ScenarioConfig config = load_config("");
  CHECK(config.source.x == 0.0);
  CHECK(config.source.y == 0.0);
  CHECK(config.ris.x == 10.0);
  CHECK(config.ris.y == 10.0);
  CHECK(config.destination.x == 70.0);
  CHECK(config.destination.y == 0.0);
  CHECK(config.eavesdropper.x == 70.0);
  CHECK(config.eavesdropper.y == -10.0);
  CHECK(config.k_elems == 144);
  CHECK(config.k_sr == 3.0);
  CHECK(config.k_rd == 0.5);
  CHECK(config.k_re == 1.25);
  CHECK(config.radio.carrier_freq_hz == 2.1e9);
  CHECK(config.radio.bandwidth_hz == 1.0e7);
  CHECK(config.radio.noise_figure_db == 6.0);
  CHECK(config.radio.pathloss_exponent == -2.5);
  CHECK(config.radio.tx_power_dbm == 20.0);
  CHECK(config.radio.pathloss_convention == PathLossConvention::paper);
  CHECK(config.rates == std::vector<double>{1.0});
  CHECK(config.trials == 10000);
  CHECK(config.schemes == std::vector<Scheme>{Scheme::opt, Scheme::ran});
}

TEST_CASE("single override keeps the other defaults") {
  const ScenarioConfig config = load_config("k_elems = 196\n");
  CHECK(config.k_elems == 196);
  CHECK(config.k_sr == 3.0);
  CHECK(config.radio.tx_power_dbm == 20.0);
}

TEST_CASE("comments, blanks and inline comments parse") {
  const ScenarioConfig config = load_config(
      "# reference setup\n"
      "\n"
      "ptx_dbm = 30   # boost\n"
      "rates = 0, 0.5, 1\n"
      "schemes = opt, ran, max_main\n"
      "pathloss_convention = inverse\n");
  CHECK(config.radio.tx_power_dbm == 30.0);
  CHECK(config.rates == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(config.schemes ==
        std::vector<Scheme>{Scheme::opt, Scheme::ran, Scheme::max_main});
  CHECK(config.radio.pathloss_convention == PathLossConvention::inverse);
}

TEST_CASE("domain violations name the key") {
  CHECK_THROWS_WITH_AS(load_config("k_elems = 0\n"),
                       doctest::Contains("k_elems"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("trials = 0\n"),
                       doctest::Contains("trials"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("k_sr = -1\n"), doctest::Contains("k_sr"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(load_config("rates = 1, -2\n"),
                       doctest::Contains("rates"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("bw_hz = 0\n"), doctest::Contains("bw_hz"),
                       ConfigError);
}

TEST_CASE("unknown keys and malformed lines carry line numbers") {
  CHECK_THROWS_WITH_AS(load_config("k_elems = 16\nbogus_key = 1\n"),
                       doctest::Contains("line 2"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("k_elems = 16\nbogus_key = 1\n"),
                       doctest::Contains("bogus_key"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("just some text\n"),
                       doctest::Contains("line 1"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("k_sr = abc\n"), doctest::Contains("k_sr"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(load_config("k_sr = 1.5x\n"),
                       doctest::Contains("trailing"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config("pathloss_convention = nonsense\n"),
                       doctest::Contains("pathloss_convention"), ConfigError);
}

TEST_CASE("apply_override mirrors the config key space") {
  ScenarioConfig config;
  apply_override(config, "ptx_dbm=40");
  CHECK(config.radio.tx_power_dbm == 40.0);
  apply_override(config, "schemes = max_main");
  CHECK(config.schemes == std::vector<Scheme>{Scheme::max_main});
  apply_override(config, "master_seed = 987654321");
  CHECK(config.master_seed == 987654321);
  CHECK_THROWS_AS(apply_override(config, "nonsense"), ConfigError);
  CHECK_THROWS_AS(apply_override(config, "bogus=1"), ConfigError);
}

TEST_CASE("scheme names round-trip") {
  for (const Scheme s : {Scheme::opt, Scheme::ran, Scheme::max_main}) {
    CHECK(parse_scheme(scheme_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_scheme("best"), ConfigError);
}

TEST_CASE("context precomputes the linear-unit budget") {
  const ScenarioConfig config = load_config("");
  const ScenarioContext ctx(config);
  CHECK(ctx.ptx_watts == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(ctx.noise_watts == doctest::Approx(1.5848931924611109e-13).epsilon(1e-12));
  CHECK(ctx.link_sr.distance == doctest::Approx(14.142135623730951).epsilon(1e-14));
  CHECK(ctx.link_rd.distance == doctest::Approx(60.827625302982199).epsilon(1e-14));
  CHECK(ctx.link_re.distance ==
        doctest::Approx(distance({10, 10}, {70, -10})).epsilon(1e-14));
  CHECK(ctx.link_sr.scatter_var == ctx.link_sr.pathloss);
  CHECK(ctx.link_sr.los_mean ==
        doctest::Approx(std::sqrt(3.0 * ctx.link_sr.pathloss)).epsilon(1e-14));
}

TEST_CASE("context rejects invalid configs") {
  ScenarioConfig config;
  config.k_elems = 0;
  CHECK_THROWS_AS(ScenarioContext{config}, ConfigError);
}
