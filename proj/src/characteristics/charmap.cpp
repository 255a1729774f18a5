#include "novikov/characteristics/charmap.hpp"

#include <cmath>
#include <stdexcept>

#include "novikov/core/fd.hpp"
#include "novikov/core/interp.hpp"
#include "novikov/helmholtz/green.hpp"
#include "novikov/io/csv.hpp"

namespace novikov::chr {

namespace {

// u and u_x sampled mid-interval by linear blending of neighbouring snapshots
struct SampledVelocity {
  const FieldHistory& h;
  std::vector<Field> ux;  // per snapshot

  explicit SampledVelocity(const FieldHistory& hist) : h(hist) {
    ux.reserve(static_cast<std::size_t>(h.snapshot_count()));
    for (int k = 0; k < h.snapshot_count(); ++k) ux.push_back(diff_x(h.snapshot(k), 1));
  }

  double u_at(int k0, int k1, double w, double x) const {
    return (1.0 - w) * interp_cubic(h.snapshot(k0), x) + w * interp_cubic(h.snapshot(k1), x);
  }
  double ux_at(int k0, int k1, double w, double x) const {
    return (1.0 - w) * interp_cubic(ux[static_cast<std::size_t>(k0)], x) +
           w * interp_cubic(ux[static_cast<std::size_t>(k1)], x);
  }
};

} // namespace

CharMap evolve_characteristics(const FieldHistory& h, const std::vector<double>& seeds) {
  if (h.snapshot_count() < 3)
    throw std::invalid_argument("evolve_characteristics: need at least 3 snapshots");
  const double dt = h.uniform_dt();
  if (dt > 1e-2 + 1e-12)
    throw std::invalid_argument("evolve_characteristics: history too coarse (need dt <= 1e-2)");
  const double Lsafe = h.grid()->half_length() - 2.0 * h.grid()->dx();

  SampledVelocity vel(h);
  const int nt = h.snapshot_count();
  const std::size_t ns = seeds.size();

  CharMap cm;
  cm.seeds = seeds;
  cm.times.resize(static_cast<std::size_t>(nt));
  cm.q.assign(static_cast<std::size_t>(nt), std::vector<double>(ns));
  cm.qx.assign(static_cast<std::size_t>(nt), std::vector<double>(ns));
  for (int k = 0; k < nt; ++k) cm.times[static_cast<std::size_t>(k)] = h.time(k);
  for (std::size_t j = 0; j < ns; ++j) {
    if (std::abs(seeds[j]) > Lsafe)
      throw std::invalid_argument("evolve_characteristics: seed outside the safe domain");
    cm.q[0][j] = seeds[j];
    cm.qx[0][j] = 1.0;
  }

  for (int k = 0; k + 1 < nt; ++k) {
    for (std::size_t j = 0; j < ns; ++j) {
      double qv = cm.q[static_cast<std::size_t>(k)][j];
      double qxv = cm.qx[static_cast<std::size_t>(k)][j];
      // one RK4 step across the snapshot interval
      auto f = [&](double w, double pos) { return -2.0 * vel.u_at(k, k + 1, w, pos); };
      auto fx = [&](double w, double pos, double s) {
        return -2.0 * vel.ux_at(k, k + 1, w, pos) * s;
      };
      const double k1 = f(0.0, qv), l1 = fx(0.0, qv, qxv);
      const double k2 = f(0.5, qv + 0.5 * dt * k1), l2 = fx(0.5, qv + 0.5 * dt * k1, qxv + 0.5 * dt * l1);
      const double k3 = f(0.5, qv + 0.5 * dt * k2), l3 = fx(0.5, qv + 0.5 * dt * k2, qxv + 0.5 * dt * l2);
      const double k4 = f(1.0, qv + dt * k3), l4 = fx(1.0, qv + dt * k3, qxv + dt * l3);
      qv += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      qxv += dt / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
      if (std::abs(qv) > Lsafe)
        throw std::runtime_error("evolve_characteristics: curve left the truncated domain");
      cm.q[static_cast<std::size_t>(k + 1)][j] = qv;
      cm.qx[static_cast<std::size_t>(k + 1)][j] = qxv;
    }
  }
  return cm;
}

SignReport sign_preservation_report(const FieldHistory& h, const CharMap& cm) {
  const int nt = h.snapshot_count();
  if (static_cast<int>(cm.times.size()) != nt)
    throw std::invalid_argument("sign_preservation_report: map does not match history");
  const std::size_t ns = cm.seeds.size();

  std::vector<Field> m_fields, ux_fields;
  m_fields.reserve(static_cast<std::size_t>(nt));
  ux_fields.reserve(static_cast<std::size_t>(nt));
  for (int k = 0; k < nt; ++k) {
    m_fields.push_back(helmholtz_apply(h.snapshot(k)));
    ux_fields.push_back(diff_x(h.snapshot(k), 1));
  }

  SignReport rep;
  rep.m_along.assign(static_cast<std::size_t>(nt), std::vector<double>(ns));
  rep.min_m_along = std::numeric_limits<double>::infinity();
  rep.min_qx = std::numeric_limits<double>::infinity();
  rep.min_u = std::numeric_limits<double>::infinity();
  rep.bound_gap_min = std::numeric_limits<double>::infinity();

  for (int k = 0; k < nt; ++k)
    for (double v : h.snapshot(k).values) rep.min_u = std::min(rep.min_u, v);

  std::vector<double> m0(ns);
  for (std::size_t j = 0; j < ns; ++j) m0[j] = interp_cubic(m_fields[0], cm.seeds[j]);

  // accumulate int_0^t (u - 3 u_x)(s, q(s)) ds and int_0^t u_x(s, q(s)) ds by
  // trapezoid over the snapshot times
  std::vector<double> acc_bound(ns, 0.0), acc_ux(ns, 0.0);
  std::vector<double> prev_bound(ns), prev_ux(ns);

  for (int k = 0; k < nt; ++k) {
    const double dt = (k > 0) ? cm.times[static_cast<std::size_t>(k)] -
                                    cm.times[static_cast<std::size_t>(k - 1)]
                              : 0.0;
    for (std::size_t j = 0; j < ns; ++j) {
      const double qv = cm.q[static_cast<std::size_t>(k)][j];
      const double uv = interp_cubic(h.snapshot(k), qv);
      const double uxv = interp_cubic(ux_fields[static_cast<std::size_t>(k)], qv);
      const double mv = interp_cubic(m_fields[static_cast<std::size_t>(k)], qv);
      rep.m_along[static_cast<std::size_t>(k)][j] = mv;
      rep.min_m_along = std::min(rep.min_m_along, mv);
      rep.min_qx = std::min(rep.min_qx, cm.qx[static_cast<std::size_t>(k)][j]);

      const double bound_rate = uv - 3.0 * uxv;
      if (k > 0) {
        acc_bound[j] += 0.5 * dt * (prev_bound[j] + bound_rate);
        acc_ux[j] += 0.5 * dt * (prev_ux[j] + uxv);
      }
      prev_bound[j] = bound_rate;
      prev_ux[j] = uxv;

      const double lower = m0[j] * std::exp(-2.0 * acc_bound[j]);
      rep.bound_gap_min = std::min(rep.bound_gap_min, mv - lower);
      rep.qx_formula_mismatch =
          std::max(rep.qx_formula_mismatch,
                   std::abs(cm.qx[static_cast<std::size_t>(k)][j] - std::exp(-2.0 * acc_ux[j])));
    }
  }
  return rep;
}

std::string CharMap::to_csv(const std::vector<std::vector<double>>& m_along) const {
  std::string out = "t,x_seed,q,qx,m_along\n";
  for (std::size_t k = 0; k < times.size(); ++k)
    for (std::size_t j = 0; j < seeds.size(); ++j) {
      out += io::fmt(times[k]) + "," + io::fmt(seeds[j]) + "," + io::fmt(q[k][j]) + "," +
             io::fmt(qx[k][j]) + ",";
      out += m_along.empty() ? "0" : io::fmt(m_along[k][j]);
      out += "\n";
    }
  return out;
}

} // namespace novikov::chr
