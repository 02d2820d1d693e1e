#include "lwpa/kernels.hpp"

#include <cmath>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace lwpa::kernels {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void toroidal_sq_dist_scalar(const double* xs, const double* ys, std::size_t n,
                             double qx, double qy, double width, double height,
                             double* out) {
  const double hw = 0.5 * width;
  const double hh = 0.5 * height;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = std::fabs(xs[i] - qx);
    if (dx > hw) dx = width - dx;
    double dy = std::fabs(ys[i] - qy);
    if (dy > hh) dy = height - dy;
    out[i] = dx * dx + dy * dy;
  }
}

#if defined(__x86_64__) || defined(_M_X64)

__attribute__((target("avx2,fma")))
double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  double lanes[4];
  _mm256_storeu_pd(lanes, acc0);
  double acc = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

__attribute__((target("avx2")))
void toroidal_sq_dist_avx2(const double* xs, const double* ys, std::size_t n,
                           double qx, double qy, double width, double height,
                           double* out) {
  const __m256d vqx = _mm256_set1_pd(qx);
  const __m256d vqy = _mm256_set1_pd(qy);
  const __m256d vw = _mm256_set1_pd(width);
  const __m256d vh = _mm256_set1_pd(height);
  const __m256d vhw = _mm256_set1_pd(0.5 * width);
  const __m256d vhh = _mm256_set1_pd(0.5 * height);
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx), absmask);
    __m256d dy = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy), absmask);
    dx = _mm256_min_pd(dx, _mm256_sub_pd(vw, dx));
    dy = _mm256_min_pd(dy, _mm256_sub_pd(vh, dy));
    dx = _mm256_min_pd(dx, vhw);  // guard against fp drift at the fold point
    dy = _mm256_min_pd(dy, vhh);
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + i, d2);
  }
  if (i < n)
    toroidal_sq_dist_scalar(xs + i, ys + i, n - i, qx, qy, width, height, out + i);
}

namespace {
bool have_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
const bool g_avx2 = have_avx2();
}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  return g_avx2 ? dot_avx2(a, b, n) : dot_scalar(a, b, n);
}

void toroidal_sq_dist(const double* xs, const double* ys, std::size_t n,
                      double qx, double qy, double width, double height,
                      double* out) {
  if (g_avx2)
    toroidal_sq_dist_avx2(xs, ys, n, qx, qy, width, height, out);
  else
    toroidal_sq_dist_scalar(xs, ys, n, qx, qy, width, height, out);
}

const char* backend_name() { return g_avx2 ? "avx2" : "scalar"; }

#else  // non-x86: scalar only (NEON left to the compiler's auto-vectorizer)

double dot(const double* a, const double* b, std::size_t n) {
  return dot_scalar(a, b, n);
}

void toroidal_sq_dist(const double* xs, const double* ys, std::size_t n,
                      double qx, double qy, double width, double height,
                      double* out) {
  toroidal_sq_dist_scalar(xs, ys, n, qx, qy, width, height, out);
}

const char* backend_name() { return "scalar"; }

#endif

}  // namespace lwpa::kernels
