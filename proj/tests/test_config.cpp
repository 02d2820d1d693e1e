#include "doctest.h"
#include "lwpa/config.hpp"
#include "lwpa/sweep.hpp"

#include <cmath>

using namespace lwpa;

TEST_CASE("config: unit suffixes convert to canonical SI") {
  const ValidatedConfig cfg = validate_config(R"(
# reference operating point
lambda_W = 200 per_km2
lambda_L = 100 per_km2
xi_u = 200 per_km2
P_W = 18 dBm
B_w = 10 MHz
delta = 50 m
)");
  CHECK(cfg.params.lambda_W == doctest::Approx(2e-4));
  CHECK(cfg.params.lambda_L == doctest::Approx(1e-4));
  CHECK(cfg.params.P_W == doctest::Approx(0.0631).epsilon(1e-3));
  CHECK(cfg.params.B_w == doctest::Approx(1e7));
  CHECK(cfg.params.delta == 50.0);
}

TEST_CASE("config: violations are aggregated with field names") {
  try {
    validate_config("alpha = 2\np_closed = 1.5\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    std::string all;
    for (const auto& msg : e.errors()) all += msg + "\n";
    CHECK(all.find("alpha must exceed 2") != std::string::npos);
    CHECK(all.find("p_closed") != std::string::npos);
  }
}

TEST_CASE("config: sweep block parsing") {
  const ValidatedConfig cfg = validate_config(R"(
sweep.parameter = xi_u
sweep.values = 100:300:100 per_km2
sweep.metric = lwpa_density
sweep.p_set = 0.2, 0.5
sweep.engines = analytic
mc.replications = 10
)");
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->values.size() == 3);
  CHECK(cfg.sweep->values[0] == doctest::Approx(1e-4));
  CHECK(cfg.sweep->p_set.size() == 2);
  CHECK(cfg.sweep->engine_analytic);
  CHECK_FALSE(cfg.sweep->engine_montecarlo);
}

TEST_CASE("config: rejected sweep combinations") {
  CHECK_THROWS_AS(validate_config("sweep.parameter = xi_u\n"
                                  "sweep.values = 100,200 per_km2\n"
                                  "sweep.metric = wifi_success\n"),
                  ConfigError);
  CHECK_THROWS_AS(validate_config("sweep.parameter = delta\n"
                                  "sweep.values = 80,30 m\n"
                                  "sweep.metric = ase_improvement\n"),
                  ConfigError);
  CHECK_THROWS_AS(validate_config("sweep.parameter = delta\n"
                                  "sweep.values = 30,80 m\n"
                                  "sweep.metric = rate_improvement\n"
                                  "sweep.engines = montecarlo\n"),
                  ConfigError);
}

TEST_CASE("config: theta values in dB convert to linear") {
  const ValidatedConfig cfg = validate_config(R"(
sweep.parameter = theta
sweep.values = -10, 0, 10 dB
sweep.metric = wifi_success
)");
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->values[0] == doctest::Approx(0.1));
  CHECK(cfg.sweep->values[1] == doctest::Approx(1.0));
  CHECK(cfg.sweep->values[2] == doctest::Approx(10.0));
}

TEST_CASE("single-value analytic sweep equals the direct engine call") {
  SweepSpec spec;
  spec.parameter = SweepParameter::xi_u;
  spec.values = {4e-4};
  spec.p_set = {0.5};
  spec.metric = Metric::lwpa_density;
  const NetworkParams base = reference_default_params(0.5, 2e-4);
  const SweepResult res = run_sweep(spec, base, McConfig{});
  REQUIRE(res.rows.size() == 1);
  NetworkParams cell = base;
  cell.xi_u = 4e-4;
  CHECK(res.rows[0].metric ==
        doctest::Approx(density_approximations(cell).lambda_a3).epsilon(1e-14));
}

TEST_CASE("sweep continues past failing cells") {
  SweepSpec spec;
  spec.parameter = SweepParameter::p_closed;
  spec.values = {0.0, 0.5};  // p=0 has no ASE baseline
  spec.p_set = {0.5};        // overridden per-cell by the swept parameter
  spec.metric = Metric::ase_improvement;
  const SweepResult res = run_sweep(spec, reference_default_params(0.5, 4e-4), McConfig{});
  REQUIRE(res.rows.size() == 2);
  CHECK_FALSE(res.rows[0].error.empty());
  CHECK(res.rows[1].error.empty());
  CHECK(res.rows[1].metric > 1.0);
}

TEST_CASE("sweep CSV is self-describing and stable") {
  SweepSpec spec;
  spec.parameter = SweepParameter::delta;
  spec.values = {40.0, 50.0};
  spec.p_set = {0.5};
  spec.metric = Metric::rate_improvement;
  const NetworkParams base = reference_default_params(0.5, 4e-4);
  const std::string a = run_sweep(spec, base, McConfig{}).to_csv();
  const std::string b = run_sweep(spec, base, McConfig{}).to_csv();
  CHECK(a == b);
  CHECK(a.find("# lwpa-eval") != std::string::npos);
  CHECK(a.find("seed=") != std::string::npos);
  CHECK(a.find("delta,p,engine,rate_improvement") != std::string::npos);
}

TEST_CASE("figure presets exist and unknown names are rejected") {
  CHECK(figure_preset_names().size() == 6);
  CHECK_THROWS_AS(run_figure_preset("fig99"), ConfigError);
}
