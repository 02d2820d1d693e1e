#pragma once

#include <stdexcept>
#include <vector>

#include "lwpa/analytic.hpp"
#include "lwpa/core.hpp"
#include "lwpa/point_process.hpp"
#include "lwpa/rng.hpp"

namespace lwpa {

class StatisticalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct McConfig {
  int replications = 500;
  Window window{2000.0, 2000.0};
  int fading_draws_per_geometry = 200;
  double confidence_level = 0.99;
  RngSeed root_seed{};

  void validate(const NetworkParams& params) const {
    if (replications < 1)
      throw std::invalid_argument("mc.replications must be >= 1");
    if (fading_draws_per_geometry < 1)
      throw std::invalid_argument("mc.fading_draws must be >= 1");
    if (!(confidence_level > 0.0 && confidence_level < 1.0))
      throw std::invalid_argument("mc.confidence must lie in (0,1)");
    if (params.delta > 0.0 && window.min_side() < 4.0 * params.delta)
      throw std::invalid_argument("mc window side must be >= 4*delta");
  }
};

struct McEstimate {
  double mean = 0.0;
  double ci_halfwidth = 0.0;
  long n_samples = 0;
};

// standard normal quantile (Acklam's rational approximation)
double normal_quantile(double p);

// Mean active-LWPA density over independent realizations.
McEstimate estimate_lwpa_density(const NetworkParams& params, const McConfig& mc,
                                 const ActivationOptions& opts = {});

struct LinkSuccessEstimate {
  SuccessCurve curve;                // source = montecarlo, with CIs
  std::vector<double> sinr_samples;  // raw linear SINR draws
};

// Typical LWPA WiFi link: one uniformly chosen active AP per realization,
// user uniform in its service disk, interferers = remaining active LWPA APs
// plus active closed APs, i.i.d. exp(1) fading per draw, toroidal distances.
// Throws StatisticalError when no realization produces an active LWPA AP.
LinkSuccessEstimate estimate_wifi_success(const std::vector<double>& thresholds,
                                          const NetworkParams& params,
                                          const McConfig& mc,
                                          const ActivationOptions& opts = {});

// Typical LTE link: user at the window centre, nearest-BS association,
// all other BSs interfere.
LinkSuccessEstimate estimate_lte_success(const std::vector<double>& thresholds,
                                         const NetworkParams& params,
                                         const McConfig& mc);

// Mean log2(1+SINR) over raw samples, in bits/s/Hz.
McEstimate estimate_rate(const std::vector<double>& sinr_samples,
                         double confidence_level = 0.99);

// Exact integral of the empirical survival curve of the samples against
// 1/(1+theta); equals mean ln(1+SINR) by the distribution identity.
double empirical_success_rate_integral(std::vector<double> sinr_samples);

// Paired-seed ratio of WiFi-band ASE with activation enabled vs disabled.
McEstimate estimate_ase_improvement(const NetworkParams& params,
                                    const McConfig& mc,
                                    const ActivationOptions& opts = {});

// Single-geometry SINR draws for a receiver at `user` served by a
// transmitter at toroidal distance link_dist, against fixed interferer
// locations; exposed for direct testing of the SINR arithmetic.
std::vector<double> simulate_link_sinr(const std::vector<Point>& interferers,
                                       const Point& user, double link_dist,
                                       double tx_power, const NetworkParams& params,
                                       const Window& window, int fading_draws,
                                       Rng& rng);

}  // namespace lwpa
