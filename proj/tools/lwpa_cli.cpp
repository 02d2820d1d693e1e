#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lwpa/config.hpp"
#include "lwpa/kernels.hpp"
#include "lwpa/sweep.hpp"

namespace {

constexpr int kExitConfigError = 1;
constexpr int kExitNumericalError = 2;
constexpr int kExitStatisticalError = 3;

std::filesystem::path output_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("LWPA_OUT_DIR")) return env;
  return ".";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  std::cout << "wrote " << path.string() << "\n";
}

lwpa::ValidatedConfig load(const std::string& path,
                           std::optional<std::uint64_t> seed) {
  lwpa::ValidatedConfig cfg = lwpa::load_config_file(path);
  if (seed) cfg.mc.root_seed = lwpa::RngSeed{*seed};
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Downlink performance evaluation of MPTCP-proxy LTE-WLAN path "
               "aggregation: closed-form approximations and spatial Monte "
               "Carlo, side by side"};
  app.require_subcommand(1);

  std::string out_flag;
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--out", out_flag, "Output directory (default $LWPA_OUT_DIR or .)");
  app.add_option("--seed", seed_flag, "Override the root RNG seed");

  // figure
  auto* fig = app.add_subcommand("figure", "Run a named figure preset sweep");
  std::string fig_name;
  fig->add_option("name", fig_name, "One of fig2 fig4 fig5 fig6 fig7 fig8")
      ->required();
  std::optional<int> fig_reps, fig_draws;
  std::optional<double> fig_window, fig_xi;
  bool fig_no_mc = false;
  fig->add_option("--replications", fig_reps, "Monte Carlo replications");
  fig->add_option("--fading-draws", fig_draws, "Fading draws per geometry");
  fig->add_option("--window", fig_window, "Square window side in meters");
  fig->add_option("--xi-u", fig_xi, "User density in /km2 for non-swept presets");
  fig->add_flag("--no-mc", fig_no_mc, "Skip the Monte Carlo engine");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a custom sweep from a config file");
  std::string sweep_config;
  sweep->add_option("config", sweep_config, "Config file path")->required();

  // validate
  auto* validate = app.add_subcommand("validate", "Parse and validate a config file");
  std::string validate_config_path;
  validate->add_option("config", validate_config_path, "Config file path")->required();

  // density
  auto* density = app.add_subcommand("density", "Print density approximations and validity flags");
  std::string density_config;
  density->add_option("config", density_config, "Config file path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig->parsed()) {
      lwpa::PresetOverrides ov;
      ov.replications = fig_reps;
      ov.fading_draws = fig_draws;
      ov.window_side = fig_window;
      ov.seed = seed_flag;
      if (fig_xi) ov.xi_u = lwpa::per_km2_to_per_m2(*fig_xi);
      ov.disable_montecarlo = fig_no_mc;
      const std::string csv = lwpa::run_figure_preset(fig_name, ov);
      write_file(output_dir(out_flag) / (fig_name + ".csv"), csv);
      return 0;
    }
    if (sweep->parsed()) {
      const lwpa::ValidatedConfig cfg = load(sweep_config, seed_flag);
      if (!cfg.sweep)
        throw lwpa::ConfigError({"config has no sweep block (sweep.parameter/values/metric)"});
      const lwpa::SweepResult result =
          lwpa::run_sweep(*cfg.sweep, cfg.params, cfg.mc, cfg.options);
      write_file(output_dir(out_flag) / "sweep.csv", result.to_csv());
      for (const lwpa::SweepRow& r : result.rows)
        if (!r.error.empty())
          std::cerr << "cell value=" << r.value << " p=" << r.p << " ("
                    << r.engine << ") failed: " << r.error << "\n";
      return 0;
    }
    if (validate->parsed()) {
      const lwpa::ValidatedConfig cfg = load(validate_config_path, seed_flag);
      std::cout << "config OK\n"
                << "lambda_L = " << lwpa::per_m2_to_per_km2(cfg.params.lambda_L) << " /km2\n"
                << "lambda_W = " << lwpa::per_m2_to_per_km2(cfg.params.lambda_W) << " /km2\n"
                << "p_closed = " << cfg.params.p_closed << "\n"
                << "xi_u = " << lwpa::per_m2_to_per_km2(cfg.params.xi_u) << " /km2\n"
                << "R_serve = " << cfg.params.R_serve << " m\n"
                << "delta = " << cfg.params.delta << " m\n"
                << "alpha = " << cfg.params.alpha << "\n"
                << "P_L = " << cfg.params.P_L << " W\n"
                << "P_W = " << cfg.params.P_W << " W\n"
                << "sigma2 = " << cfg.params.sigma2 << " W\n"
                << "B_c = " << cfg.params.B_c << " Hz\n"
                << "B_w = " << cfg.params.B_w << " Hz\n"
                << "simd backend = " << lwpa::kernels::backend_name() << "\n";
      return 0;
    }
    if (density->parsed()) {
      const lwpa::ValidatedConfig cfg = load(density_config, seed_flag);
      const lwpa::DensityApproximations d =
          lwpa::density_approximations(cfg.params);
      std::cout << "P1 = " << d.p1 << "\n"
                << "P2 = " << d.p2 << "\n"
                << "lambda_tilde_W2 = " << d.lambda_tilde_w2 << " /m2\n"
                << "lambda_tilde_W1 = " << d.lambda_tilde_w1 << " /m2\n"
                << "lambda_hat_W1 = " << d.lambda_hat_w1 << " /m2\n"
                << "lambda_tilde_W = " << d.lambda_tilde_w << " /m2\n"
                << "lambda_A1 = " << d.lambda_a1 << " /m2\n"
                << "lambda_A2 = " << d.lambda_a2 << " /m2\n"
                << "lambda_A3 = " << d.lambda_a3 << " /m2\n"
                << "validity_a (lambda_tilde_W2 < P1*lambda_W1): "
                << (d.validity_a ? "ok" : "VIOLATED") << "\n"
                << "validity_b (lambda_tilde_W2 < P1*lambda_hat_W1): "
                << (d.validity_b ? "ok" : "VIOLATED") << "\n";
      if (!d.validity_a || !d.validity_b)
        std::cerr << "warning: an approximation is evaluated outside its "
                     "stated validity region\n";
      return 0;
    }
  } catch (const lwpa::ConfigError& e) {
    for (const std::string& msg : e.errors()) std::cerr << "config error: " << msg << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const lwpa::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const lwpa::StatisticalError& e) {
    std::cerr << "statistical failure: " << e.what() << "\n";
    return kExitStatisticalError;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
  return 0;
}
