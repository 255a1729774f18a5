#include "novikov/helmholtz/green.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "novikov/core/fd.hpp"
#include "novikov/kernels/kernels.hpp"

namespace novikov {

double kernel_value(KernelKind kind, double x) {
  const double gv = 0.5 * std::exp(-std::abs(x));
  if (kind == KernelKind::g) return gv;
  if (x > 0.0) return 0.0;
  if (x < 0.0) return 2.0 * gv;
  return 0.5;
}

namespace {

// Trapezoid sums of kernel(x_i - y_j) * w_j f_j by forward/backward exponential
// recursions: with a_j = w_j f_j and rho = e^{-dx},
//   Lsum_i = sum_{j<=i} rho^{i-j} a_j,   Rsum_i = sum_{j>=i} rho^{j-i} a_j,
// so the g-sum is (Lsum + Rsum - a)/2 and the G-sum is Rsum - a/2.
void trapezoid_sums_fast(KernelKind kind, std::span<const double> f, double dx,
                         std::span<double> out) {
  const std::size_t n = f.size();
  const double rho = std::exp(-dx);
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = dx * f[j];
  a.front() *= 0.5;
  a.back() *= 0.5;

  std::vector<double> rsum(n);
  rsum[n - 1] = a[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) rsum[j] = rho * rsum[j + 1] + a[j];

  if (kind == KernelKind::G) {
    for (std::size_t i = 0; i < n; ++i) out[i] = rsum[i] - 0.5 * a[i];
    return;
  }
  double lsum = a[0];
  out[0] = 0.5 * (lsum + rsum[0] - a[0]);
  for (std::size_t i = 1; i < n; ++i) {
    lsum = rho * lsum + a[i];
    out[i] = 0.5 * (lsum + rsum[i] - a[i]);
  }
}

// Same sums by direct evaluation: per output node two contiguous dot products
// against precomputed kernel decay tables (K forward, K reversed).
void trapezoid_sums_direct(KernelKind kind, std::span<const double> f, double dx,
                           std::span<double> out) {
  const std::size_t n = f.size();
  const auto& k = kern::active();
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = dx * f[j];
  a.front() *= 0.5;
  a.back() *= 0.5;

  std::vector<double> decay(n), decay_rev(n);
  for (std::size_t d = 0; d < n; ++d) decay[d] = std::exp(-static_cast<double>(d) * dx);
  for (std::size_t d = 0; d < n; ++d) decay_rev[d] = decay[n - 1 - d];

  for (std::size_t i = 0; i < n; ++i) {
    const double right = (i + 1 < n) ? k.dot(decay.data() + 1, a.data() + i + 1, n - 1 - i) : 0.0;
    if (kind == KernelKind::G) {
      out[i] = right + 0.5 * a[i];
    } else {
      const double left = k.dot(decay_rev.data() + (n - 1 - i), a.data(), i + 1);
      out[i] = 0.5 * (left + right);
    }
  }
}

} // namespace

Field convolve(KernelKind kind, const Field& f, const ConvOptions& opts,
               std::span<const double> fprime) {
  const int n = f.size();
  const double dx = f.grid->dx();
  Field out(f.grid, f.t);

  if (opts.direct)
    trapezoid_sums_direct(kind, f.values, dx, out.values);
  else
    trapezoid_sums_fast(kind, f.values, dx, out.values);

  if (!opts.corrected) return out;

  // Endpoint correction at the kernel kink (and domain ends): restores 4th
  // order, which plain trapezoid loses across the |x|-type break of the kernel.
  std::vector<double> deriv_storage;
  std::span<const double> fp = fprime;
  if (fp.empty()) {
    deriv_storage.resize(static_cast<std::size_t>(n));
    diff_x_into(f.values, dx, 1, deriv_storage);
    fp = deriv_storage;
  } else if (fp.size() != f.values.size()) {
    throw std::invalid_argument("convolve: fprime size mismatch");
  }

  const double c = dx * dx / 12.0;
  const double L = f.grid->half_length();
  const double f0 = f.values.front(), fp0 = fp.front();
  const double fn = f.values.back(), fpn = fp.back();
  for (int i = 0; i < n; ++i) {
    const double x = f.grid->node(i);
    const auto j = static_cast<std::size_t>(i);
    if (kind == KernelKind::g) {
      out[i] -= 0.5 * c * (2.0 * f.values[j]
                           - std::exp(-(L + x)) * (f0 + fp0)
                           + std::exp(x - L) * (fpn - fn));
    } else {
      out[i] -= c * (std::exp(x - L) * (fpn - fn) - (fp[j] - f.values[j]));
    }
  }
  return out;
}

Field helmholtz_apply(const Field& f) {
  Field d2 = diff_x(f, 2);
  Field out(f.grid, f.t);
  for (int i = 0; i < f.size(); ++i) out[i] = f[i] - d2[i];
  return out;
}

} // namespace novikov
