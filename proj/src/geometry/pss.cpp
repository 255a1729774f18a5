#include "novikov/geometry/pss.hpp"

#include <cmath>
#include <stdexcept>

#include "novikov/core/fd.hpp"

namespace novikov::geo {

PSSParams::PSSParams(double m1_, double mu_, int sigma_) : m1(m1_), mu(mu_), sigma(sigma_) {
  if (m1 != -2.0 && m1 != 1.0) throw std::invalid_argument("PSSParams: m1 must be -2 or 1");
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("PSSParams: sigma must be +-1");
  if (!std::isfinite(mu)) throw std::invalid_argument("PSSParams: mu must be finite");
}

double PSSParams::nu() const { return std::sqrt(1.0 + mu * mu); }

FrameCoeffs frame_coeffs(const Jet3& j, const PSSParams& p) {
  const double s = static_cast<double>(p.sigma);
  const double nu = p.nu();
  const double m = j.u - j.uxx;
  const double psi = (4.0 / p.m1) * j.u * j.ux - 2.0 * j.ux * j.ux - 2.0 * j.u * j.u;
  FrameCoeffs f{};
  f.f11 = m;
  f.f12 = 2.0 * j.u * m + psi;
  f.f21 = p.mu * m + s * p.m1 * nu;
  f.f22 = p.mu * f.f12;
  f.f31 = s * nu * m + p.m1 * p.mu;
  f.f32 = s * nu * f.f12;
  return f;
}

namespace {

// total derivatives of f11 and f12; the remaining coefficients are affine in
// these two, so their derivatives follow by the same linear relations
struct PrimaryDerivs {
  double d_f11, d_f12;
};

PrimaryDerivs primary_dt(const Jet3& j, const PSSParams& p) {
  const double m = j.u - j.uxx;
  const double mt = j.ut - j.utxx;
  const double d_f12 = 2.0 * (j.ut * m + j.u * mt) +
                       (4.0 / p.m1) * (j.ut * j.ux + j.u * j.utx) - 4.0 * j.ux * j.utx -
                       4.0 * j.u * j.ut;
  return {mt, d_f12};
}

PrimaryDerivs primary_dx(const Jet3& j, const PSSParams& p) {
  const double m = j.u - j.uxx;
  const double mx = j.ux - j.uxxx;
  const double d_f12 = 2.0 * (j.ux * m + j.u * mx) +
                       (4.0 / p.m1) * (j.ux * j.ux + j.u * j.uxx) - 4.0 * j.ux * j.uxx -
                       4.0 * j.u * j.ux;
  return {mx, d_f12};
}

FrameCoeffs lift(const PrimaryDerivs& d, const PSSParams& p) {
  const double s = static_cast<double>(p.sigma);
  const double nu = p.nu();
  FrameCoeffs f{};
  f.f11 = d.d_f11;
  f.f12 = d.d_f12;
  f.f21 = p.mu * d.d_f11;
  f.f22 = p.mu * d.d_f12;
  f.f31 = s * nu * d.d_f11;
  f.f32 = s * nu * d.d_f12;
  return f;
}

} // namespace

FrameCoeffs frame_coeffs_dt(const Jet3& j, const PSSParams& p) { return lift(primary_dt(j, p), p); }
FrameCoeffs frame_coeffs_dx(const Jet3& j, const PSSParams& p) { return lift(primary_dx(j, p), p); }

StructureResiduals structure_residuals(const Jet3& j, const PSSParams& p) {
  const FrameCoeffs f = frame_coeffs(j, p);
  const FrameCoeffs ft = frame_coeffs_dt(j, p);
  const FrameCoeffs fx = frame_coeffs_dx(j, p);
  StructureResiduals r{};
  r.r1 = (fx.f12 - ft.f11) - (f.f31 * f.f22 - f.f32 * f.f21);
  r.r2 = (fx.f22 - ft.f21) - (f.f11 * f.f32 - f.f12 * f.f31);
  r.r3 = (fx.f32 - ft.f31) - (f.f11 * f.f22 - f.f12 * f.f21);
  return r;
}

double genericity(const Jet3& j, const PSSParams& p) {
  const FrameCoeffs f = frame_coeffs(j, p);
  return f.f11 * f.f22 - f.f12 * f.f21;
}

MetricCoeffs metric(const Jet3& j, const PSSParams& p) {
  const FrameCoeffs f = frame_coeffs(j, p);
  MetricCoeffs g{};
  g.g11 = f.f11 * f.f11 + f.f21 * f.f21;
  g.g12 = f.f11 * f.f12 + f.f21 * f.f22;
  g.g22 = f.f12 * f.f12 + f.f22 * f.f22;
  return g;
}

MetricCoeffs metric_displayed(const Jet3& j, const PSSParams& p) {
  const double s = static_cast<double>(p.sigma);
  const double nu = p.nu();
  const double m = j.u - j.uxx;
  const double psi = (4.0 / p.m1) * j.u * j.ux - 2.0 * j.ux * j.ux - 2.0 * j.u * j.u;
  const double q = 2.0 * j.u * m + psi;
  MetricCoeffs g{};
  const double f21 = p.mu * m + s * p.m1 * nu;
  g.g11 = m * m + f21 * f21;
  g.g12 = q * ((1.0 + p.mu * p.mu) * m + s * p.m1 * p.mu * nu);
  g.g22 = (1.0 + p.mu * p.mu) * q * q;
  return g;
}

double zero_curvature_residual(const Jet3& j, const PSSParams& p) {
  const FrameCoeffs f = frame_coeffs(j, p);
  const FrameCoeffs ft = frame_coeffs_dt(j, p);
  const FrameCoeffs fx = frame_coeffs_dx(j, p);

  // X and T entries (factor 1/2 folded in at the end where possible)
  const double X11 = 0.5 * f.f21, X12 = 0.5 * (f.f11 - f.f31), X21 = 0.5 * (f.f11 + f.f31);
  const double T11 = 0.5 * f.f22, T12 = 0.5 * (f.f12 - f.f32), T21 = 0.5 * (f.f12 + f.f32);

  const double dtX11 = 0.5 * ft.f21, dtX12 = 0.5 * (ft.f11 - ft.f31),
               dtX21 = 0.5 * (ft.f11 + ft.f31);
  const double dxT11 = 0.5 * fx.f22, dxT12 = 0.5 * (fx.f12 - fx.f32),
               dxT21 = 0.5 * (fx.f12 + fx.f32);

  // commutator of [[a, b], [c, -a]] matrices
  const double c11 = X12 * T21 - X21 * T12;
  const double c12 = 2.0 * (X11 * T12 - X12 * T11);
  const double c21 = 2.0 * (X21 * T11 - X11 * T21);

  const double e11 = dtX11 - dxT11 + c11;
  const double e12 = dtX12 - dxT12 + c12;
  const double e21 = dtX21 - dxT21 + c21;
  // trace-free structure: e22 = -e11
  return std::sqrt(2.0 * e11 * e11 + e12 * e12 + e21 * e21);
}

namespace {

void fill_metric_point(MetricField& mf, int k, int i, const Jet3& j, double generic_tol) {
  const MetricCoeffs g = metric(j, mf.params);
  const double w = genericity(j, mf.params);
  const std::size_t n = mf.idx(k, i);
  mf.g11[n] = g.g11;
  mf.g12[n] = g.g12;
  mf.g22[n] = g.g22;
  mf.w[n] = w;
  // threshold scaled by the local frame magnitude
  const FrameCoeffs f = frame_coeffs(j, mf.params);
  const double scale = std::max({1.0, std::abs(f.f11), std::abs(f.f12), std::abs(f.f21),
                                 std::abs(f.f22), std::abs(f.f31), std::abs(f.f32)});
  mf.generic[n] = std::abs(w) > generic_tol * scale ? 1 : 0;
}

} // namespace

MetricField metric_field_from_evaluator(const alg::SolutionEvaluator& sol, const PSSParams& p,
                                        double t0, double t1, int nt, double x0, double x1,
                                        int nx, double generic_tol) {
  if (nt < 2 || nx < 2) throw std::invalid_argument("metric_field: need nt, nx >= 2");
  MetricField mf;
  mf.params = p;
  mf.times.resize(static_cast<std::size_t>(nt));
  mf.xs.resize(static_cast<std::size_t>(nx));
  for (int k = 0; k < nt; ++k)
    mf.times[static_cast<std::size_t>(k)] = t0 + (t1 - t0) * k / double(nt - 1);
  for (int i = 0; i < nx; ++i)
    mf.xs[static_cast<std::size_t>(i)] = x0 + (x1 - x0) * i / double(nx - 1);
  const std::size_t total = mf.times.size() * mf.xs.size();
  mf.g11.resize(total);
  mf.g12.resize(total);
  mf.g22.resize(total);
  mf.w.resize(total);
  mf.generic.resize(total);
  for (int k = 0; k < nt; ++k)
    for (int i = 0; i < nx; ++i)
      fill_metric_point(mf, k, i,
                        sol(mf.times[static_cast<std::size_t>(k)], mf.xs[static_cast<std::size_t>(i)]),
                        generic_tol);
  return mf;
}

MetricField metric_field_from_history(const FieldHistory& h, const PSSParams& p,
                                      double generic_tol) {
  const int nt = h.snapshot_count();
  if (nt < 3) throw std::invalid_argument("metric_field_from_history: need >= 3 snapshots");
  MetricField mf;
  mf.params = p;
  mf.times.resize(static_cast<std::size_t>(nt));
  for (int k = 0; k < nt; ++k) mf.times[static_cast<std::size_t>(k)] = h.time(k);
  const auto ns = h.grid()->nodes();
  mf.xs.assign(ns.begin(), ns.end());
  const std::size_t total = mf.times.size() * mf.xs.size();
  mf.g11.resize(total);
  mf.g12.resize(total);
  mf.g22.resize(total);
  mf.w.resize(total);
  mf.generic.resize(total);
  for (int k = 0; k < nt; ++k) {
    const auto jets = jet_field(h, k);
    for (int i = 0; i < h.grid()->size(); ++i)
      fill_metric_point(mf, k, i, jets[static_cast<std::size_t>(i)], generic_tol);
  }
  return mf;
}

namespace {

// 4th-order central first/second derivative weights on 5 uniform samples
struct LatticeDeriv {
  double d1[5];
  double d2[5];
  explicit LatticeDeriv(double h) {
    const double c1[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
    const double c2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};
    for (int s = 0; s < 5; ++s) {
      d1[s] = c1[s] / (12.0 * h);
      d2[s] = c2[s] / (12.0 * h * h);
    }
  }
};

} // namespace

CurvatureField gauss_curvature(const MetricField& mf, double mask_w_min) {
  const int nt = static_cast<int>(mf.times.size());
  const int nx = static_cast<int>(mf.xs.size());
  if (nt < 5 || nx < 5)
    throw std::invalid_argument("gauss_curvature: lattice too small for the stencil");
  const double ht = mf.times[1] - mf.times[0];
  const double hx = mf.xs[1] - mf.xs[0];
  const LatticeDeriv Dt(ht), Dx(hx);

  CurvatureField cf;
  cf.times = mf.times;
  cf.xs = mf.xs;
  cf.K.assign(mf.times.size() * mf.xs.size(), 0.0);
  cf.valid.assign(mf.times.size() * mf.xs.size(), 0);

  auto deriv_x = [&](const std::vector<double>& a, int k, int i, const double* w) {
    double acc = 0.0;
    for (int s = -2; s <= 2; ++s) acc += w[s + 2] * a[mf.idx(k, i + s)];
    return acc;
  };
  auto deriv_t = [&](const std::vector<double>& a, int k, int i, const double* w) {
    double acc = 0.0;
    for (int s = -2; s <= 2; ++s) acc += w[s + 2] * a[mf.idx(k + s, i)];
    return acc;
  };

  for (int k = 2; k < nt - 2; ++k) {
    for (int i = 2; i < nx - 2; ++i) {
      const std::size_t n = mf.idx(k, i);
      bool ok = true;
      for (int sk = -2; sk <= 2 && ok; ++sk)
        for (int si = -2; si <= 2 && ok; ++si)
          ok = mf.generic[mf.idx(k + sk, i + si)] != 0;
      if (!ok) continue;
      if (mask_w_min > 0.0 && std::abs(mf.w[n]) <= mask_w_min) continue;

      const double E = mf.g11[n], F = mf.g12[n], G = mf.g22[n];
      const double E_t = deriv_t(mf.g11, k, i, Dt.d1);
      const double E_tt = deriv_t(mf.g11, k, i, Dt.d2);
      const double E_x = deriv_x(mf.g11, k, i, Dx.d1);
      const double F_x = deriv_x(mf.g12, k, i, Dx.d1);
      const double F_t = deriv_t(mf.g12, k, i, Dt.d1);
      const double G_x = deriv_x(mf.g22, k, i, Dx.d1);
      const double G_xx = deriv_x(mf.g22, k, i, Dx.d2);
      const double G_t = deriv_t(mf.g22, k, i, Dt.d1);
      // mixed derivative: x-derivative of the t-derivative column
      double F_xt = 0.0;
      for (int s = -2; s <= 2; ++s) F_xt += Dx.d1[s + 2] * deriv_t(mf.g12, k, i + s, Dt.d1);

      const double det = E * G - F * F;
      if (det <= 0.0) continue;

      const double a11 = -0.5 * E_tt + F_xt - 0.5 * G_xx;
      const double a12 = 0.5 * E_x;
      const double a13 = F_x - 0.5 * E_t;
      const double a21 = F_t - 0.5 * G_x;
      const double a31 = 0.5 * G_t;
      const double m1det = a11 * (E * G - F * F) - a12 * (a21 * G - F * a31) +
                           a13 * (a21 * F - E * a31);
      const double b12 = 0.5 * E_t;
      const double b13 = 0.5 * G_x;
      const double m2det = 0.0 * (E * G - F * F) - b12 * (b12 * G - F * b13) +
                           b13 * (b12 * F - E * b13);
      cf.K[n] = (m1det - m2det) / (det * det);
      cf.valid[n] = 1;
    }
  }
  return cf;
}

AuditVerdict nongeneric_audit(const sol::SolutionSpec& spec, const PSSParams& p) {
  const auto w = spec.default_window();
  double sup = 0.0;
  for (int it = 0; it < w.nt; ++it) {
    const double t = w.nt == 1 ? w.t0 : w.t0 + (w.t1 - w.t0) * it / double(w.nt - 1);
    for (int ix = 0; ix < w.nx; ++ix) {
      const double x = w.nx == 1 ? w.x0 : w.x0 + (w.x1 - w.x0) * ix / double(w.nx - 1);
      sup = std::max(sup, std::abs(genericity(spec.jet_at(t, x), p)));
    }
  }
  return {sup < 1e-10, sup};
}

} // namespace novikov::geo
