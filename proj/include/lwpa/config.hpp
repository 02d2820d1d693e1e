#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lwpa/analytic.hpp"
#include "lwpa/core.hpp"
#include "lwpa/montecarlo.hpp"
#include "lwpa/point_process.hpp"

namespace lwpa {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors)
      : std::runtime_error(join(errors)), errors_(std::move(errors)) {}
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += "; ";
      s += e;
    }
    return s;
  }
  std::vector<std::string> errors_;
};

enum class SweepParameter { xi_u, delta, p_closed, theta };
enum class Metric {
  lwpa_density,
  wifi_success,
  lte_success,
  rate_improvement,
  ase_improvement
};

const char* to_string(SweepParameter p);
const char* to_string(Metric m);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::xi_u;
  std::vector<double> values;  // canonical units; strictly increasing
  std::vector<double> p_set{0.2, 0.5, 0.8};
  Metric metric = Metric::lwpa_density;
  bool engine_analytic = true;
  bool engine_montecarlo = false;
};

struct ModelOptions {
  ActivationOptions activation;
  AseOptions ase;
};

struct ValidatedConfig {
  NetworkParams params;
  McConfig mc;
  ModelOptions options;
  std::optional<SweepSpec> sweep;
};

// Parse a flat key-value config with typed unit suffixes (per_km2, dBm, m,
// MHz, dB ...). Unset model keys fall back to the reference defaults with
// p_closed = 0.5 and xi_u = 400/km^2. Aggregates every violation into one
// ConfigError.
ValidatedConfig validate_config(const std::string& text);

ValidatedConfig load_config_file(const std::string& path);

}  // namespace lwpa
