#pragma once

#include <functional>
#include <vector>

#include "lwpa/core.hpp"
#include "lwpa/quadrature.hpp"

namespace lwpa {

// Density of a Matern type-II hard-core thinning of a PPP of intensity
// lambda with hard-core distance delta: (1 - exp(-lambda*pi*delta^2)) /
// (pi*delta^2). Continuous at delta = 0 (returns lambda).
double matern_density(double lambda, double delta);

// P1: probability of at least one user within the service range.
double retain_p1(double xi_u, double R);

// P2: hole probability of the active closed-access tier,
// exp(exp(-p*lambda_W*pi*delta^2) - 1).
double retain_p2(double p, double lambda_W, double delta);

struct DensityApproximations {
  double lambda_a1 = 0.0;        // MHCP of the P1*P2-thinned open tier
  double lambda_a2 = 0.0;        // P1*P2-thinning of the open-tier MHCP
  double lambda_a3 = 0.0;        // (1-p)*P1-thinning of the full-tier MHCP
  double lambda_tilde_w2 = 0.0;  // active closed-access density
  double lambda_tilde_w1 = 0.0;  // P1*P2*(1-p)*lambda_W
  double lambda_hat_w1 = 0.0;    // open-tier MHCP density
  double lambda_tilde_w = 0.0;   // full-tier MHCP density
  double p1 = 0.0;
  double p2 = 0.0;
  bool validity_a = false;  // lambda_tilde_w2 < P1 * lambda_W1
  bool validity_b = false;  // lambda_tilde_w2 < P1 * lambda_hat_W1
};

DensityApproximations density_approximations(const NetworkParams& params);

// Success probability of a typical LWPA WiFi link at linear SINR threshold
// theta, with interferers approximated as a PPP of the given density outside
// an exclusion disk of radius max(delta - l, 0) around the user. The link
// distance l is averaged under f(l) = 2l/R^2 on [0, R].
double wifi_success_probability(double theta, const NetworkParams& params,
                                double lambda_interferers,
                                const QuadratureConfig& cfg = {});

// Success probability of a typical LTE link under nearest-BS association;
// the exclusion radius equals the serving distance.
double lte_success_probability(double theta, const NetworkParams& params,
                               const QuadratureConfig& cfg = {});

// Ergodic rate in bits/s/Hz from a success-probability function:
// integral of P(theta)/(1+theta) over [0, inf) gives E[ln(1+SINR)] in nats.
double ergodic_rate(const std::function<double(double)>& success,
                    const QuadratureConfig& cfg = {});

// P_CI = B_w * R_WiFi * N_W / (B_c * R_LTE) with N_W = lambda_A / lambda_L
// and lambda_A = lambda_a3.
double cellular_rate_improvement(const NetworkParams& params,
                                 const QuadratureConfig& cfg = {});

struct AseOptions {
  // Evaluate the no-LWPA baseline success probability at the raw closed-tier
  // density p*lambda_W instead of the active-closed density lambda_tilde_w2.
  bool literal_baseline_density = false;
};

// P_SI = T / T_baseline where T is the WiFi-band area spectral efficiency
// with LWPA enabled and the baseline has lambda_A = 0. Throws
// std::domain_error when p_closed = 0 (empty baseline).
double ase_improvement(const NetworkParams& params, const AseOptions& opts = {},
                       const QuadratureConfig& cfg = {});

struct SuccessCurve {
  std::vector<double> thresholds;  // linear SINR
  std::vector<double> values;
  enum class Source { analytic, montecarlo } source = Source::analytic;
  std::vector<double> ci_halfwidth;  // empty for analytic
};

}  // namespace lwpa
