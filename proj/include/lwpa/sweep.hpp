#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lwpa/config.hpp"

namespace lwpa {

struct SweepRow {
  double value = 0.0;  // swept value, canonical units
  double p = 0.0;
  std::string engine;
  double metric = 0.0;
  std::optional<double> ci_halfwidth;
  std::string error;  // non-empty when this cell failed
};

struct SweepResult {
  SweepSpec spec;
  NetworkParams base_params;
  McConfig mc;
  ModelOptions options;
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;  // validity-flag and preset notes

  std::string to_csv() const;
};

// Cartesian execution over (values x p_set x engines); per-cell failures are
// recorded in the row and the sweep continues.
SweepResult run_sweep(const SweepSpec& spec, const NetworkParams& params,
                      const McConfig& mc, const ModelOptions& options = {});

struct PresetOverrides {
  std::optional<int> replications;
  std::optional<int> fading_draws;
  std::optional<double> window_side;
  std::optional<std::uint64_t> seed;
  std::optional<double> xi_u;  // default for presets that do not sweep it
  bool disable_montecarlo = false;
};

// Figure presets at the reference parameter set:
//   fig2: active-LWPA density vs user density (all three approximations + MC)
//   fig4: WiFi link success probability vs theta (analytic + MC)
//   fig5: WiFi ASE improvement vs guard radius
//   fig6: WiFi ASE improvement vs user density
//   fig7: cellular rate improvement vs guard radius
//   fig8: cellular rate improvement vs user density
// Returns the full CSV document (deterministic for a fixed seed).
std::string run_figure_preset(const std::string& name,
                              const PresetOverrides& overrides = {});

std::vector<std::string> figure_preset_names();

}  // namespace lwpa
