#pragma once

#include <functional>
#include <string>

#include "novikov/core/jet.hpp"

namespace novikov::alg {

/// Coordinates in the ordered symmetry basis
///   X1 = d/dx,  X2 = d/dt,  X3 = t d/dt - u d/du.
struct AlgebraVec {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double norm() const;
};

AlgebraVec operator+(const AlgebraVec& a, const AlgebraVec& b);
AlgebraVec operator-(const AlgebraVec& a, const AlgebraVec& b);
AlgebraVec operator*(double s, const AlgebraVec& a);

/// Lie bracket; the only nonzero structure relation is [X2, X3] = X2.
AlgebraVec commutator(const AlgebraVec& a, const AlgebraVec& b);

/// Ad(exp(eps * X_i)) applied to y, i in {1,2,3}:
///   i=1 identity, i=2 maps a2 -> a2 - eps*a3, i=3 maps a2 -> e^eps * a2.
AlgebraVec adjoint(int basis_index, double eps, const AlgebraVec& y);

/// The adjoint computed from its bracket series
///   y - eps [X_i, y] + eps^2/2 [X_i, [X_i, y]] - ...
/// summed to convergence; an independent route used by tests.
AlgebraVec adjoint_series(int basis_index, double eps, const AlgebraVec& y);

/// Canonical representative of the one-dimensional subalgebra spanned by y:
///   a3 != 0 -> (a1/a3, 0, 1)  "alpha X1 + X3"   (via Ad(exp(eps X2)), eps = a2/a3)
///   a3 == 0, a2 != 0 -> (a1/a2, 1, 0)  "c X1 + X2"
///   else -> (1, 0, 0)  "X1"
/// Records the adjoint map applied (index 0 = none) and the rescaling so the
/// reduction can be replayed: rep == scale * adjoint(index, eps, y).
struct OptimalRep {
  AlgebraVec rep;
  std::string label;
  int adjoint_index = 0;
  double adjoint_eps = 0.0;
  double scale = 1.0;
};

OptimalRep optimal_representative(const AlgebraVec& y);

/// Solution evaluator: exact jet of a solution at (t, x).
using SolutionEvaluator = std::function<Jet3(double, double)>;

/// One-parameter group action with a closed-form flow. Covers the
/// representative families: translations a1 X1 + a2 X2 (includes X1, X2 and
/// c X1 + X2) and scalings a1 X1 + a3 X3 (includes X3 and alpha X1 + X3).
/// Mixed a2 != 0, a3 != 0 generators have no closed-form flow here; reduce
/// them with optimal_representative first.
struct GroupAction {
  enum class Family { Translation, Scaling };
  Family family;
  AlgebraVec generator;
  double eps;

  static GroupAction make(const AlgebraVec& generator, double eps);
};

/// Pushforward of a solution by the group flow; jets transform by the chain
/// rule, so the result of transporting a solution is again a solution.
SolutionEvaluator flow_transform(const GroupAction& act, SolutionEvaluator sol);

} // namespace novikov::alg
