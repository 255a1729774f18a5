#pragma once

#include <cstddef>

#include "novikov/kernels/isa.hpp"

namespace novikov::kern {

// Hot inner loops shared by the finite-difference, quadrature and time-stepping
// code. Each entry has a scalar reference implementation and an AVX2 variant;
// the two are equivalence-tested against each other (results may differ by
// rounding only, since the vector paths reassociate sums and use FMA).
struct Kernels {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha*x[i]
  void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
  // out[i] = x[i] + alpha*y[i]
  void (*xpay)(double* out, const double* x, double alpha, const double* y, std::size_t n);
  // out[i] = u[i] + (h/6)*(k1[i] + 2 k2[i] + 2 k3[i] + k4[i])
  void (*rk4_combine)(double* out, const double* u, double h, const double* k1,
                      const double* k2, const double* k3, const double* k4, std::size_t n);
  // out[i] = a[i]*b[i]
  void (*mul)(double* out, const double* a, const double* b, std::size_t n);
  // out[i] = sum_{s=-r..r} w[s+r]*f[i+s] for i in [i0, i1); caller guarantees
  // i0 >= r and i1 + r <= len(f).
  void (*stencil)(double* out, const double* f, const double* w, int r,
                  std::size_t i0, std::size_t i1);
};

const Kernels& scalar_kernels();

/// AVX2 kernel table, or nullptr when the build target or CPU lacks AVX2/FMA.
const Kernels* avx2_kernels();

/// Table matching active_isa().
const Kernels& active();

} // namespace novikov::kern
