#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace lwpa {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& msg, double achieved_error)
      : std::runtime_error(msg), achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7,15) with bisection of the worst interval.
// Throws NumericalError when the subdivision budget runs out before the
// tolerance is met.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg = {});

inline double integrate_value(const Integrand& f, double a, double b,
                              const QuadratureConfig& cfg = {}) {
  return integrate(f, a, b, cfg).value;
}

// Integral of f over [lower, inf) via the rational substitution
// w = lower + t/(1-t); no truncation cutoff.
double integrate_semi_infinite(const Integrand& f, double lower,
                               const QuadratureConfig& cfg = {});

// Integral of f(theta)/(1+theta) over [0, inf) via theta = u/(1-u), under
// which the 1/(1+theta) factor cancels the Jacobian up to 1/(1-u).
double improper_theta_integral(const Integrand& f,
                               const QuadratureConfig& cfg = {});

}  // namespace lwpa
