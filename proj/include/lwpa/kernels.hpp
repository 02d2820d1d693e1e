#pragma once

#include <cstddef>

// Data-parallel inner loops of the Monte Carlo engine: interference power
// accumulation (a dot product over per-interferer fading x pathloss weights)
// and batched toroidal squared distances. Scalar reference kernels are always
// available; an AVX2/FMA variant is selected once at startup when the CPU
// supports it. Both variants are equivalence-tested.

namespace lwpa::kernels {

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* a, const double* b, std::size_t n);
#endif

// Squared wrap-around distance from (qx,qy) to each (xs[i],ys[i]) on a
// width x height torus.
void toroidal_sq_dist(const double* xs, const double* ys, std::size_t n,
                      double qx, double qy, double width, double height,
                      double* out);
void toroidal_sq_dist_scalar(const double* xs, const double* ys, std::size_t n,
                             double qx, double qy, double width, double height,
                             double* out);
#if defined(__x86_64__) || defined(_M_X64)
void toroidal_sq_dist_avx2(const double* xs, const double* ys, std::size_t n,
                           double qx, double qy, double width, double height,
                           double* out);
#endif

// "avx2" or "scalar"
const char* backend_name();

}  // namespace lwpa::kernels
