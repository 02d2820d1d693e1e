#include "lwpa/laplace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lwpa {

double interference_tail_integral(double lower, double alpha,
                                  const QuadratureConfig& cfg) {
  if (!(lower >= 0.0)) throw std::invalid_argument("tail integral: lower must be >= 0");
  if (!(alpha > 2.0)) throw std::invalid_argument("tail integral: alpha must exceed 2");
  const double half_alpha = 0.5 * alpha;
  auto f = [half_alpha](double w) { return 1.0 / (1.0 + std::pow(w, half_alpha)); };
  return integrate_semi_infinite(f, lower, cfg);
}

double laplace_interference_generic(double s, double x, double lambda,
                                    double alpha, const QuadratureConfig& cfg) {
  if (s == 0.0 || lambda == 0.0) return 1.0;
  const double s_pow = std::pow(s, 2.0 / alpha);
  const double lower = x * x / s_pow;
  const double tail = interference_tail_integral(lower, alpha, cfg);
  return std::exp(-std::numbers::pi * lambda * s_pow * tail);
}

double laplace_interference_alpha4(double s, double x, double lambda) {
  if (s == 0.0 || lambda == 0.0) return 1.0;
  const double rs = std::sqrt(s);
  const double tail = std::numbers::pi / 2.0 - std::atan(x * x / rs);
  return std::exp(-std::numbers::pi * lambda * rs * tail);
}

double laplace_interference(double s, double x, double lambda, double alpha,
                            const QuadratureConfig& cfg) {
  if (alpha == 4.0) return laplace_interference_alpha4(s, x, lambda);
  return laplace_interference_generic(s, x, lambda, alpha, cfg);
}

}  // namespace lwpa
