#include "novikov/algebra/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace novikov::alg {

double AlgebraVec::norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }

AlgebraVec operator+(const AlgebraVec& a, const AlgebraVec& b) {
  return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}
AlgebraVec operator-(const AlgebraVec& a, const AlgebraVec& b) {
  return {a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
}
AlgebraVec operator*(double s, const AlgebraVec& a) { return {s * a.a1, s * a.a2, s * a.a3}; }

AlgebraVec commutator(const AlgebraVec& a, const AlgebraVec& b) {
  return {0.0, a.a2 * b.a3 - a.a3 * b.a2, 0.0};
}

AlgebraVec adjoint(int basis_index, double eps, const AlgebraVec& y) {
  switch (basis_index) {
    case 1: return y;
    case 2: return {y.a1, y.a2 - eps * y.a3, y.a3};
    case 3: return {y.a1, std::exp(eps) * y.a2, y.a3};
    default: throw std::invalid_argument("adjoint: basis index must be 1, 2 or 3");
  }
}

AlgebraVec adjoint_series(int basis_index, double eps, const AlgebraVec& y) {
  AlgebraVec xi{basis_index == 1 ? 1.0 : 0.0, basis_index == 2 ? 1.0 : 0.0,
                basis_index == 3 ? 1.0 : 0.0};
  if (basis_index < 1 || basis_index > 3)
    throw std::invalid_argument("adjoint_series: basis index must be 1, 2 or 3");
  AlgebraVec sum = y;
  AlgebraVec term = y;
  for (int n = 1; n <= 80; ++n) {
    term = (-eps / static_cast<double>(n)) * commutator(xi, term);
    sum = sum + term;
    if (term.norm() <= 1e-18 * (1.0 + sum.norm())) break;
  }
  return sum;
}

OptimalRep optimal_representative(const AlgebraVec& y) {
  const double scale_ref = y.norm();
  if (scale_ref == 0.0) throw std::invalid_argument("optimal_representative: zero vector");
  const double tol = 1e-14 * scale_ref;

  OptimalRep out;
  if (std::abs(y.a3) > tol) {
    out.adjoint_index = 2;
    out.adjoint_eps = y.a2 / y.a3;
    out.scale = 1.0 / y.a3;
    out.rep = {y.a1 / y.a3, 0.0, 1.0};
    out.label = "alpha X1 + X3";
  } else if (std::abs(y.a2) > tol) {
    out.scale = 1.0 / y.a2;
    out.rep = {y.a1 / y.a2, 1.0, 0.0};
    out.label = "c X1 + X2";
  } else {
    out.scale = 1.0 / y.a1;
    out.rep = {1.0, 0.0, 0.0};
    out.label = "X1";
  }
  return out;
}

GroupAction GroupAction::make(const AlgebraVec& generator, double eps) {
  const double tol = 1e-14 * (1.0 + generator.norm());
  const bool has_t_shift = std::abs(generator.a2) > tol;
  const bool has_scaling = std::abs(generator.a3) > tol;
  if (has_t_shift && has_scaling)
    throw std::invalid_argument(
        "GroupAction: no closed-form flow for mixed X2/X3 combinations; "
        "reduce with optimal_representative first");
  return {has_scaling ? Family::Scaling : Family::Translation, generator, eps};
}

SolutionEvaluator flow_transform(const GroupAction& act, SolutionEvaluator sol) {
  const AlgebraVec gen = act.generator;
  const double eps = act.eps;
  if (act.family == GroupAction::Family::Translation) {
    const double dx = gen.a1 * eps;
    const double dt = gen.a2 * eps;
    return [sol, dx, dt](double t, double x) {
      Jet3 j = sol(t - dt, x - dx);
      j.t = t;
      j.x = x;
      return j;
    };
  }
  // a1 X1 + a3 X3: (t, x, u) -> (e^{a3 eps} t, x + a1 eps, e^{-a3 eps} u)
  const double s = std::exp(-gen.a3 * eps);
  const double dx = gen.a1 * eps;
  return [sol, s, dx](double t, double x) {
    Jet3 inner = sol(s * t, x - dx);
    Jet3 j;
    j.t = t;
    j.x = x;
    j.u = s * inner.u;
    j.ux = s * inner.ux;
    j.uxx = s * inner.uxx;
    j.uxxx = s * inner.uxxx;
    j.ut = s * s * inner.ut;
    j.utx = s * s * inner.utx;
    j.utxx = s * s * inner.utxx;
    return j;
  };
}

} // namespace novikov::alg
