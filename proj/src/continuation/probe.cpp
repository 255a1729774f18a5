#include "novikov/continuation/probe.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "novikov/helmholtz/green.hpp"
#include "novikov/kernels/kernels.hpp"

namespace novikov::uc {

ProbeInterval::ProbeInterval(double a_, double b_) : a(a_), b(b_) {
  if (!(a < b)) throw std::invalid_argument("ProbeInterval: need a < b strictly");
}

double window_kernel(const ProbeInterval& iv, double y) {
  return kernel_value(KernelKind::G, iv.b - y) - kernel_value(KernelKind::G, iv.a - y);
}

double window_kernel_l1(const ProbeInterval& iv) {
  return 2.0 * (1.0 - std::exp(iv.a - iv.b));
}

Field F_of(const Field& u) {
  Field usq(u.grid, u.t);
  kern::active().mul(usq.values.data(), u.values.data(), u.values.data(), usq.values.size());
  return convolve(KernelKind::G, usq);
}

Field F_of(const FieldHistory& h, int snapshot_index) {
  return F_of(h.snapshot(snapshot_index));
}

namespace {

// trapezoid of w(y) u(y)^2 over node range [j0, j1]
double weighted_mass(const Field& u, int j0, int j1, const std::function<double(double)>& w) {
  if (j0 > j1) return 0.0;
  const double dx = u.grid->dx();
  double sum = 0.0;
  for (int j = j0; j <= j1; ++j) {
    const double v = w(u.grid->node(j)) * u[j] * u[j];
    const bool edge = (j == j0 || j == j1);
    sum += (edge ? 0.5 : 1.0) * v;
  }
  return sum * dx;
}

} // namespace

RepresentationCheck representation_check(const Field& u, const ProbeInterval& iv) {
  const auto& grid = *u.grid;
  if (iv.a < -grid.half_length() || iv.b > grid.half_length())
    throw std::invalid_argument("representation_check: interval outside the grid");
  const int ia = grid.nearest_index(iv.a);
  const int ib = grid.nearest_index(iv.b);
  if (ia == ib) throw std::invalid_argument("representation_check: window narrower than dx");
  const ProbeInterval snapped(grid.node(ia), grid.node(ib));

  // plain trapezoid sums on both sides so the identity is tested rule-for-rule
  Field usq(u.grid, u.t);
  kern::active().mul(usq.values.data(), u.values.data(), u.values.data(), usq.values.size());
  ConvOptions plain;
  plain.corrected = false;
  const Field F = convolve(KernelKind::G, usq, plain);

  RepresentationCheck rc{};
  rc.a_used = snapped.a;
  rc.b_used = snapped.b;
  rc.lhs = F[ib] - F[ia];
  rc.rhs = weighted_mass(u, 0, grid.size() - 1,
                         [&](double y) { return window_kernel(snapped, y); });
  rc.residual_abs = std::abs(rc.lhs - rc.rhs);
  rc.residual_rel = rc.residual_abs / std::max({std::abs(rc.lhs), std::abs(rc.rhs), 1e-30});
  return rc;
}

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::ForcedZero: return "forced-zero";
    case VerdictKind::NonzeroMass: return "nonzero-mass";
    case VerdictKind::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

Verdict continuation_diagnostic(const Field& u, const ProbeInterval& iv, double eps0) {
  const auto& grid = *u.grid;
  if (iv.a < -grid.half_length() || iv.b > grid.half_length())
    throw std::invalid_argument("continuation_diagnostic: interval outside the grid");
  const int ia = grid.nearest_index(iv.a);
  const int ib = grid.nearest_index(iv.b);
  const ProbeInterval snapped(grid.node(ia), grid.node(ib));

  Verdict v{};
  v.s_l1 = window_kernel_l1(snapped);
  for (int j = ia; j <= ib; ++j) v.sup_u_window = std::max(v.sup_u_window, std::abs(u[j]));
  for (int j = ib + 1; j < grid.size(); ++j)
    v.sup_u_right = std::max(v.sup_u_right, std::abs(u[j]));

  const Field F = F_of(u);
  v.F_a = F[ia];
  v.F_b = F[ib];
  v.tail_integral = weighted_mass(u, ib, grid.size() - 1,
                                  [&](double y) { return window_kernel(snapped, y); });

  if (v.sup_u_window >= eps0) {
    v.kind = VerdictKind::Inapplicable;
    v.reason = "u does not vanish on the window";
    return v;
  }
  if (std::abs(v.F_a) >= eps0 || std::abs(v.F_b) >= eps0) {
    v.kind = VerdictKind::Inapplicable;
    v.reason = "F does not vanish at the window endpoints";
    return v;
  }
  if (v.tail_integral < eps0 * v.s_l1) {
    v.kind = VerdictKind::ForcedZero;
    v.reason = "weighted mass beyond the window is negligible";
  } else {
    v.kind = VerdictKind::NonzeroMass;
    v.reason = "weighted mass beyond the window remains";
  }
  return v;
}

std::string to_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = verdict_name(v.kind);
  j["reason"] = v.reason;
  j["sup_u_window"] = v.sup_u_window;
  j["F_a"] = v.F_a;
  j["F_b"] = v.F_b;
  j["tail_integral"] = v.tail_integral;
  j["s_l1"] = v.s_l1;
  j["sup_u_right"] = v.sup_u_right;
  return j.dump(2);
}

} // namespace novikov::uc
