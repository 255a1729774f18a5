#pragma once

#include <cstdint>
#include <vector>

#include "novikov/algebra/algebra.hpp"
#include "novikov/core/field.hpp"
#include "novikov/core/jet.hpp"
#include "novikov/solutions/catalog.hpp"

namespace novikov::geo {

/// Frame parameters: m1 restricted to the two admissible values, free mu, and
/// the +- sign choice sigma.
struct PSSParams {
  double m1 = -2.0;
  double mu = 0.0;
  int sigma = +1;

  PSSParams() = default;
  PSSParams(double m1_, double mu_, int sigma_);
  double nu() const;  // sqrt(1 + mu^2)
};

struct FrameCoeffs {
  double f11, f12, f21, f22, f31, f32;
};

/// Coefficients of the one-forms w_i = f_{i1} dx + f_{i2} dt:
///   f11 = u - u_xx,
///   f12 = 2u(u - u_xx) + psi,  psi = (4/m1) u u_x - 2 u_x^2 - 2 u^2,
///   f21 = mu f11 + sigma m1 nu,        f22 = mu f12,
///   f31 = sigma nu f11 + m1 mu,        f32 = sigma nu f12.
FrameCoeffs frame_coeffs(const Jet3& j, const PSSParams& p);

/// Total t- and x-derivatives of the frame coefficients (chain rule in jet
/// coordinates; all required entries live inside Jet3).
FrameCoeffs frame_coeffs_dt(const Jet3& j, const PSSParams& p);
FrameCoeffs frame_coeffs_dx(const Jet3& j, const PSSParams& p);

struct StructureResiduals {
  double r1, r2, r3;
};

/// Residuals of d w1 = w3 ^ w2, d w2 = w1 ^ w3, d w3 = w1 ^ w2 (coefficients
/// of dx ^ dt); all three vanish identically on solutions.
StructureResiduals structure_residuals(const Jet3& j, const PSSParams& p);

/// dx^dt coefficient of w1 ^ w2; nonzero marks a generic point.
double genericity(const Jet3& j, const PSSParams& p);

struct MetricCoeffs {
  double g11, g12, g22;  // g = g11 dx^2 + 2 g12 dx dt + g22 dt^2
};

/// Metric from the frame squares g = w1^2 + w2^2.
MetricCoeffs metric(const Jet3& j, const PSSParams& p);

/// The same metric through its expanded polynomial form (independent route for
/// the frame/metric consistency check).
MetricCoeffs metric_displayed(const Jet3& j, const PSSParams& p);

/// Frobenius norm of dX/dt - dT/dx + [X, T] for the 2x2 zero-curvature pair
///   X = 1/2 [[f21, f11 - f31], [f11 + f31, -f21]],
///   T = 1/2 [[f22, f12 - f32], [f12 + f32, -f22]].
double zero_curvature_residual(const Jet3& j, const PSSParams& p);

/// Metric sampled on a (t, x) lattice with a genericity mask.
struct MetricField {
  PSSParams params;
  std::vector<double> times;  // strictly increasing, uniform
  std::vector<double> xs;     // uniform
  // row-major [time][x]
  std::vector<double> g11, g12, g22, w;
  std::vector<std::uint8_t> generic;

  std::size_t idx(int k, int i) const {
    return static_cast<std::size_t>(k) * xs.size() + static_cast<std::size_t>(i);
  }
};

/// Sample the metric of a closed-form solution on a uniform lattice.
MetricField metric_field_from_evaluator(const alg::SolutionEvaluator& sol, const PSSParams& p,
                                        double t0, double t1, int nt, double x0, double x1,
                                        int nx, double generic_tol = 1e-8);

/// Sample the metric from a solver history (jets by finite differences).
MetricField metric_field_from_history(const FieldHistory& h, const PSSParams& p,
                                      double generic_tol = 1e-8);

struct CurvatureField {
  std::vector<double> times;
  std::vector<double> xs;
  std::vector<double> K;                // row-major [time][x]
  std::vector<std::uint8_t> valid;      // genericity + stencil margin

  std::size_t idx(int k, int i) const {
    return static_cast<std::size_t>(k) * xs.size() + static_cast<std::size_t>(i);
  }
};

/// Gaussian curvature by the Brioschi formula: K depends only on g11, g12, g22
/// and their first/second lattice derivatives (4th-order differences), which
/// makes it an independent check of the whole frame pipeline. `mask_w_min`
/// additionally restricts to points with |w1^w2 coefficient| above the bound.
CurvatureField gauss_curvature(const MetricField& mf, double mask_w_min = 0.0);

struct AuditVerdict {
  bool nongeneric;
  double sup_abs_w;
};

/// Samples the wedge coefficient over the family's window: non-generic iff
/// sup |w| < 1e-10.
AuditVerdict nongeneric_audit(const sol::SolutionSpec& spec, const PSSParams& p);

} // namespace novikov::geo
