#include "novikov/solver/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "novikov/core/fd.hpp"
#include "novikov/helmholtz/green.hpp"
#include "novikov/kernels/kernels.hpp"

namespace novikov::evo {

Field rhs_nonlocal(const Field& u) {
  const int n = u.size();
  const auto& k = kern::active();
  Field ux = diff_x(u, 1);

  Field usq(u.grid, u.t);
  k.mul(usq.values.data(), u.values.data(), u.values.data(), usq.values.size());
  // exact derivative of u^2 for the quadrature correction
  std::vector<double> usq_prime(static_cast<std::size_t>(n));
  k.mul(usq_prime.data(), u.values.data(), ux.values.data(), usq_prime.size());
  for (double& v : usq_prime) v *= 2.0;

  Field conv = convolve(KernelKind::G, usq, {}, usq_prime);
  Field out(u.grid, u.t);
  for (int i = 0; i < n; ++i) out[i] = 2.0 * u[i] * ux[i] - usq[i] + conv[i];
  return out;
}

Field rhs_m_transport(const Field& m) {
  const int n = m.size();
  Field u = convolve(KernelKind::g, m);
  Field ux = diff_x(u, 1);
  Field mx = diff_x(m, 1);
  Field out(m.grid, m.t);
  for (int i = 0; i < n; ++i) {
    const double d = u[i] - ux[i];
    out[i] = 2.0 * u[i] * mx[i] + 6.0 * ux[i] * m[i] - 2.0 * u[i] * m[i] + 2.0 * d * d;
  }
  return out;
}

namespace {

double cfl_limit(double dx, double max_abs_u) {
  return 0.5 * dx / std::max(1.0, 2.0 * max_abs_u);
}

} // namespace

RunResult run(const CauchyProblem& p, const SolverConfig& cfg) {
  if (!p.u0) throw std::invalid_argument("run: initial data required");
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0))
    throw std::invalid_argument("run: dt and t_end must be positive");
  if (cfg.snapshot_stride < 1) throw std::invalid_argument("run: snapshot_stride must be >= 1");

  const long steps = std::lround(cfg.t_end / cfg.dt);
  if (steps < 1 || std::abs(static_cast<double>(steps) * cfg.dt - cfg.t_end) > 1e-9 * cfg.t_end)
    throw std::invalid_argument("run: t_end must be an integer number of steps");
  if (steps % cfg.snapshot_stride != 0)
    throw std::invalid_argument("run: snapshot_stride must divide the step count");

  const bool transport = cfg.formulation == Formulation::MTransport;

  RunResult res{FieldHistory(cfg.grid), RunStatus::Completed, 0.0, {}};
  Field u0 = sample_field(cfg.grid, 0.0, p.u0);
  if (u0.boundary_abs() >= 1e-12)
    res.warnings.push_back("initial data does not vanish at the domain ends (|u0| >= 1e-12)");

  // evolved state: u itself, or m in the transport formulation
  Field state = u0;
  if (transport) {
    state = p.m0 ? sample_field(cfg.grid, 0.0, *p.m0) : helmholtz_apply(u0);
  }

  auto user_field = [&](const Field& s, double t) {
    Field f = transport ? convolve(KernelKind::g, s) : s;
    f.t = t;
    return f;
  };

  const double u0_max = u0.max_abs();
  if (u0_max > cfg.blowup_threshold || !std::isfinite(u0_max)) {
    res.status = RunStatus::BlowUp;
    res.halt_time = 0.0;
    return res;
  }
  if (cfg.dt > cfl_limit(cfg.grid->dx(), u0_max)) {
    res.status = RunStatus::CflViolation;
    res.halt_time = 0.0;
    return res;
  }

  res.history.push(user_field(state, 0.0));

  auto rhs = [&](const Field& s) { return transport ? rhs_m_transport(s) : rhs_nonlocal(s); };
  const auto& kk = kern::active();
  const std::size_t n = state.values.size();
  Field stage(cfg.grid, 0.0);
  double max_u_seen = u0_max;

  for (long step = 0; step < steps; ++step) {
    const Field k1 = rhs(state);
    kk.xpay(stage.values.data(), state.values.data(), 0.5 * cfg.dt, k1.values.data(), n);
    const Field k2 = rhs(stage);
    kk.xpay(stage.values.data(), state.values.data(), 0.5 * cfg.dt, k2.values.data(), n);
    const Field k3 = rhs(stage);
    kk.xpay(stage.values.data(), state.values.data(), cfg.dt, k3.values.data(), n);
    const Field k4 = rhs(stage);
    kk.rk4_combine(state.values.data(), state.values.data(), cfg.dt, k1.values.data(),
                   k2.values.data(), k3.values.data(), k4.values.data(), n);

    const double t_next = static_cast<double>(step + 1) * cfg.dt;
    Field u_now = user_field(state, t_next);
    const double m = u_now.max_abs();
    if (!std::isfinite(m) || m > cfg.blowup_threshold) {
      res.status = RunStatus::BlowUp;
      res.halt_time = t_next;
      return res;
    }
    if (cfg.dt > cfl_limit(cfg.grid->dx(), m)) {
      res.status = RunStatus::CflViolation;
      res.halt_time = t_next;
      return res;
    }
    max_u_seen = std::max(max_u_seen, m);
    if ((step + 1) % cfg.snapshot_stride == 0) res.history.push(std::move(u_now));
  }

  res.halt_time = static_cast<double>(steps) * cfg.dt;
  // growth-bound sanity: local-in-time theory suggests small data stays within
  // a factor 2 of the initial size; report (not enforce) when exceeded
  if (max_u_seen > 2.0 * u0_max && u0_max > 0.0)
    res.warnings.push_back("sup |u| exceeded twice its initial value during the run");
  return res;
}

} // namespace novikov::evo
