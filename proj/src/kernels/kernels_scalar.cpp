#include "novikov/kernels/kernels.hpp"

namespace novikov::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void xpay_scalar(double* out, const double* x, double alpha, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

void rk4_combine_scalar(double* out, const double* u, double h, const double* k1,
                        const double* k2, const double* k3, const double* k4, std::size_t n) {
  const double c = h / 6.0;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = u[i] + c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void mul_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void stencil_scalar(double* out, const double* f, const double* w, int r,
                    std::size_t i0, std::size_t i1) {
  const int taps = 2 * r + 1;
  for (std::size_t i = i0; i < i1; ++i) {
    double acc = 0.0;
    const double* fi = f + i - static_cast<std::size_t>(r);
    for (int s = 0; s < taps; ++s) acc += w[s] * fi[s];
    out[i] = acc;
  }
}

} // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{dot_scalar,        axpy_scalar, xpay_scalar,
                             rk4_combine_scalar, mul_scalar,  stencil_scalar};
  return table;
}

} // namespace novikov::kern
