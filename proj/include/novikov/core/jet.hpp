#pragma once

#include <cmath>

namespace novikov {

/// Pointwise values of u and the derivatives entering the third-order evolution
/// equation: spatial up to u_xxx, mixed time derivatives up to u_txx.
struct Jet3 {
  double t = 0.0;
  double x = 0.0;
  double u = 0.0;
  double ux = 0.0;
  double uxx = 0.0;
  double uxxx = 0.0;
  double ut = 0.0;
  double utx = 0.0;
  double utxx = 0.0;

  bool finite() const {
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(u) && std::isfinite(ux) &&
           std::isfinite(uxx) && std::isfinite(uxxx) && std::isfinite(ut) &&
           std::isfinite(utx) && std::isfinite(utxx);
  }
};

/// Left-hand side minus right-hand side of
///   u_t - u_txx = 4 u u_x + 2 u_x^2 + 2 u u_xx - 6 u_x u_xx - 2 u u_xxx,
/// evaluated on a jet. Vanishes identically on solutions.
inline double eq_residual(const Jet3& j) {
  const double rhs = 4.0 * j.u * j.ux + 2.0 * j.ux * j.ux + 2.0 * j.u * j.uxx -
                     6.0 * j.ux * j.uxx - 2.0 * j.u * j.uxxx;
  return j.ut - j.utxx - rhs;
}

} // namespace novikov
