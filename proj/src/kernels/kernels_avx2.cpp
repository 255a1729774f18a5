// AVX2+FMA variants of the inner-loop kernels. This translation unit is compiled
// with -mavx2 -mfma; callers reach it only through the runtime-dispatched table.

#include "novikov/kernels/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace novikov::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void xpay_avx2(double* out, const double* x, double alpha, const double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(va, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

void rk4_combine_avx2(double* out, const double* u, double h, const double* k1,
                      const double* k2, const double* k3, const double* k4, std::size_t n) {
  const double c = h / 6.0;
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_loadu_pd(k1 + i);
    s = _mm256_fmadd_pd(two, _mm256_loadu_pd(k2 + i), s);
    s = _mm256_fmadd_pd(two, _mm256_loadu_pd(k3 + i), s);
    s = _mm256_add_pd(s, _mm256_loadu_pd(k4 + i));
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vc, s, _mm256_loadu_pd(u + i)));
  }
  for (; i < n; ++i)
    out[i] = u[i] + c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void mul_avx2(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void stencil_avx2(double* out, const double* f, const double* w, int r,
                  std::size_t i0, std::size_t i1) {
  const int taps = 2 * r + 1;
  std::size_t i = i0;
  for (; i + 4 <= i1; i += 4) {
    const double* fi = f + i - static_cast<std::size_t>(r);
    __m256d acc = _mm256_mul_pd(_mm256_set1_pd(w[0]), _mm256_loadu_pd(fi));
    for (int s = 1; s < taps; ++s)
      acc = _mm256_fmadd_pd(_mm256_set1_pd(w[s]), _mm256_loadu_pd(fi + s), acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < i1; ++i) {
    double acc = 0.0;
    const double* fi = f + i - static_cast<std::size_t>(r);
    for (int s = 0; s < taps; ++s) acc += w[s] * fi[s];
    out[i] = acc;
  }
}

} // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels table{dot_avx2,        axpy_avx2, xpay_avx2,
                             rk4_combine_avx2, mul_avx2,  stencil_avx2};
  return &table;
}

} // namespace novikov::kern

#else

namespace novikov::kern {
const Kernels* avx2_kernels_impl() { return nullptr; }
} // namespace novikov::kern

#endif
