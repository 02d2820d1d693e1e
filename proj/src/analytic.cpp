#include "lwpa/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lwpa/laplace.hpp"

namespace lwpa {

namespace {
constexpr double kPi = std::numbers::pi;
}

double matern_density(double lambda, double delta) {
  const double a = kPi * delta * delta;
  if (a == 0.0) return lambda;
  return -std::expm1(-lambda * a) / a;
}

double retain_p1(double xi_u, double R) {
  return -std::expm1(-xi_u * kPi * R * R);
}

double retain_p2(double p, double lambda_W, double delta) {
  return std::exp(std::expm1(-p * lambda_W * kPi * delta * delta));
}

DensityApproximations density_approximations(const NetworkParams& params) {
  params.validate();
  DensityApproximations d;
  const double p = params.p_closed;
  const double lw = params.lambda_W;
  const double delta = params.delta;
  const double lambda_w1 = (1.0 - p) * lw;

  d.p1 = retain_p1(params.xi_u, params.R_serve);
  d.p2 = retain_p2(p, lw, delta);
  d.lambda_tilde_w2 = matern_density(p * lw, delta);
  d.lambda_tilde_w1 = d.p1 * d.p2 * lambda_w1;
  d.lambda_hat_w1 = matern_density(lambda_w1, delta);
  d.lambda_tilde_w = matern_density(lw, delta);

  d.lambda_a1 = matern_density(d.lambda_tilde_w1, delta);
  d.lambda_a2 = d.p1 * d.p2 * d.lambda_hat_w1;
  d.lambda_a3 = d.p1 * (1.0 - p) * d.lambda_tilde_w;

  d.validity_a = d.lambda_tilde_w2 < d.p1 * lambda_w1;
  d.validity_b = d.lambda_tilde_w2 < d.p1 * d.lambda_hat_w1;
  return d;
}

double wifi_success_probability(double theta, const NetworkParams& params,
                                double lambda_interferers,
                                const QuadratureConfig& cfg) {
  params.validate();
  if (theta < 0.0) throw std::invalid_argument("theta must be >= 0");
  if (lambda_interferers < 0.0)
    throw std::invalid_argument("interferer density must be >= 0");
  if (theta == 0.0) return 1.0;  // SINR > 0 a.s.
  const double R = params.R_serve;
  if (R == 0.0) return 1.0;  // zero-length link
  const double alpha = params.alpha;
  const double noise_scale = params.sigma2 / params.P_W;
  auto integrand = [&](double l) {
    const double la = std::pow(l, alpha);
    const double s = theta * la;
    const double x = params.delta > l ? params.delta - l : 0.0;
    const double lap = laplace_interference(s, x, lambda_interferers, alpha, cfg);
    return (2.0 * l / (R * R)) * lap * std::exp(-theta * noise_scale * la);
  };
  return integrate_value(integrand, 0.0, R, cfg);
}

double lte_success_probability(double theta, const NetworkParams& params,
                               const QuadratureConfig& cfg) {
  params.validate();
  if (theta < 0.0) throw std::invalid_argument("theta must be >= 0");
  if (!(params.lambda_L > 0.0))
    throw std::invalid_argument("lambda_L must be positive");
  if (theta == 0.0) return 1.0;
  const double alpha = params.alpha;
  const double noise_scale = params.sigma2 / params.P_L;
  const double pil = kPi * params.lambda_L;
  // substitute u = pi*lambda_L*r^2 so the serving-distance pdf becomes e^-u
  auto integrand_u = [&](double u) {
    const double r = std::sqrt(u / pil);
    const double ra = std::pow(r, alpha);
    const double s = theta * ra;
    const double lap = laplace_interference(s, r, params.lambda_L, alpha, cfg);
    return std::exp(-u) * lap * std::exp(-theta * noise_scale * ra);
  };
  return integrate_semi_infinite(integrand_u, 0.0, cfg);
}

double ergodic_rate(const std::function<double(double)>& success,
                    const QuadratureConfig& cfg) {
  const double nats = improper_theta_integral(success, cfg);
  return nats / std::numbers::ln2;
}

double cellular_rate_improvement(const NetworkParams& params,
                                 const QuadratureConfig& cfg) {
  const DensityApproximations d = density_approximations(params);
  if (d.lambda_a3 == 0.0) return 0.0;
  const double lambda_int = d.lambda_a3 + d.lambda_tilde_w2;
  const double r_wifi = ergodic_rate(
      [&](double th) { return wifi_success_probability(th, params, lambda_int, cfg); },
      cfg);
  const double r_lte = ergodic_rate(
      [&](double th) { return lte_success_probability(th, params, cfg); }, cfg);
  if (!(r_lte > 0.0)) throw NumericalError("LTE ergodic rate is zero", 0.0);
  const double n_w = d.lambda_a3 / params.lambda_L;
  return params.B_w * r_wifi * n_w / (params.B_c * r_lte);
}

double ase_improvement(const NetworkParams& params, const AseOptions& opts,
                       const QuadratureConfig& cfg) {
  const DensityApproximations d = density_approximations(params);
  if (!(d.lambda_tilde_w2 > 0.0))
    throw std::domain_error(
        "ase_improvement: baseline is empty (p_closed = 0)");
  const double lambda_full = d.lambda_a3 + d.lambda_tilde_w2;
  const double lambda_base_int =
      opts.literal_baseline_density ? params.p_closed * params.lambda_W
                                    : d.lambda_tilde_w2;
  auto rate_at = [&](double lambda_int) {
    return improper_theta_integral(
        [&](double th) {
          return wifi_success_probability(th, params, lambda_int, cfg);
        },
        cfg);
  };
  const double t_full = lambda_full * rate_at(lambda_full);
  const double t_base = d.lambda_tilde_w2 * rate_at(lambda_base_int);
  return t_full / t_base;
}

}  // namespace lwpa
