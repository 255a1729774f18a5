#pragma once

#include <string>
#include <vector>

#include "novikov/core/field.hpp"

namespace novikov::chr {

/// Characteristic curves q(t, x) of dq/dt = -2 u(t, q), q(0, x) = x, together
/// with q_x from the variational equation dq_x/dt = -2 u_x(t, q) q_x.
struct CharMap {
  std::vector<double> times;                // snapshot times of the source history
  std::vector<double> seeds;                // starting positions x_j
  std::vector<std::vector<double>> q;       // q[k][j]
  std::vector<std::vector<double>> qx;      // qx[k][j]

  std::string to_csv(const std::vector<std::vector<double>>& m_along = {}) const;
};

/// Integrates the characteristic system through the sampled solution (cubic
/// interpolation in x, linear in t, one RK4 step per snapshot interval).
/// Requires snapshot spacing <= 1e-2; throws if a curve leaves the grid.
CharMap evolve_characteristics(const FieldHistory& h, const std::vector<double>& seeds);

struct SignReport {
  double min_m_along = 0.0;      // min over seeds and times of m(t, q(t,x))
  double min_qx = 0.0;
  double min_u = 0.0;            // min of u over the whole history
  double bound_gap_min = 0.0;    // min of m(t,q) - m0(x) exp(-2 int (u - 3u_x))
  double qx_formula_mismatch = 0.0;  // max |qx - exp(-2 int u_x ds)|
  std::vector<std::vector<double>> m_along;  // [time][seed]
};

/// Momentum values m = u - u_xx transported along the characteristics, the
/// pointwise lower-bound check, and the exponential q_x cross-check.
SignReport sign_preservation_report(const FieldHistory& h, const CharMap& cm);

} // namespace novikov::chr
