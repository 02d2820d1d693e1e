#pragma once

#include "lwpa/quadrature.hpp"

namespace lwpa {

// Tail integral of the interference Laplace exponent:
//   integral over [lower, inf) of dw / (1 + w^(alpha/2)),
// convergent for alpha > 2.
double interference_tail_integral(double lower, double alpha,
                                  const QuadratureConfig& cfg = {});

// Laplace transform of shot-noise interference from a PPP of intensity
// lambda outside an exclusion disk of radius x, unit-mean Rayleigh fading:
//   exp(-pi * lambda * s^(2/alpha) * tail(x^2 / s^(2/alpha), alpha)).
// Always evaluates the generic quadrature path.
double laplace_interference_generic(double s, double x, double lambda,
                                    double alpha,
                                    const QuadratureConfig& cfg = {});

// Closed form at alpha = 4:
//   exp(-pi * lambda * sqrt(s) * (pi/2 - atan(x^2 / sqrt(s)))).
double laplace_interference_alpha4(double s, double x, double lambda);

// Dispatching entry point; the alpha == 4 fast path is taken on exact
// equality only.
double laplace_interference(double s, double x, double lambda, double alpha,
                            const QuadratureConfig& cfg = {});

}  // namespace lwpa
