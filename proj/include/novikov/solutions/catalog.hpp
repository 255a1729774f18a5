#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "novikov/algebra/algebra.hpp"
#include "novikov/core/jet.hpp"

namespace novikov::sol {

enum class SolKind {
  Constant,          // u = a
  ExpX,              // u = a e^x
  ExpHalfNeg,        // u = a e^{-x/2}
  ExpOverPower,      // u = a e^x / t^{alpha+1}, t > 0
  TravellingExp,     // u = a e^{x - c t}
  SqrtDecay,         // u = +- sqrt(a e^{-x} + b)
  SqrtGrow,          // u = +- sqrt(a e^{2x} + b)
  TimesExpX,         // u = f(t) e^x, user-supplied smooth (f, f')
  TravellingImplicit // u = theta(x - c t), theta from the first-order reduction
};

const char* kind_name(SolKind kind);

/// Rectangular (t, x) sampling window.
struct SampleWindow {
  double t0 = 0.0, t1 = 0.0;
  int nt = 1;
  double x0 = -1.0, x1 = 1.0;
  int nx = 201;
};

/// Closed-form solution family with exact jet evaluation.
class SolutionSpec {
 public:
  SolKind kind() const { return kind_; }
  std::string label() const;

  /// Exact jet at (t, x). Throws std::domain_error outside the family's domain
  /// (t <= 0 for the t-power family, nonpositive radicand for the sqrt ones,
  /// reduction-denominator zero for the implicit travelling wave).
  Jet3 jet_at(double t, double x) const;

  alg::SolutionEvaluator evaluator() const;

  /// A (t, x) window inside the family's domain, 201 nodes across.
  SampleWindow default_window() const;

  // parameter access (meaning depends on kind)
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double alpha() const { return alpha_; }
  double C1() const { return C1_; }
  int sign() const { return sign_; }
  double f_of(double t) const { return f_(t); }
  double fprime_of(double t) const { return fprime_(t); }

  static SolutionSpec constant(double a);
  static SolutionSpec exp_x(double a);
  static SolutionSpec exp_half_neg(double a);
  static SolutionSpec exp_over_power(double a, double alpha);
  static SolutionSpec travelling_exp(double a, double c);
  static SolutionSpec sqrt_decay(double a, double b, int sign);
  static SolutionSpec sqrt_grow(double a, double b, int sign);
  /// The pair (f, f') is cross-checked by finite differences on a few sample
  /// times at construction; a mismatched pair is rejected.
  static SolutionSpec times_exp_x(std::function<double(double)> f,
                                  std::function<double(double)> fprime,
                                  std::string f_label = "f");
  static SolutionSpec travelling_implicit(double c, double C1, double theta_anchor,
                                          double anchor_z = 0.0);

  nlohmann::json to_json() const;
  static SolutionSpec from_json(const nlohmann::json& j);

 private:
  SolutionSpec() = default;

  SolKind kind_ = SolKind::Constant;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0, alpha_ = 0.0, C1_ = 0.0;
  int sign_ = +1;
  std::function<double(double)> f_, fprime_;
  std::string f_label_;
  double anchor_z_ = 0.0, anchor_theta_ = 0.0;
  // JSON round-trip data for the f presets
  std::string f_form_;
  double f_p1_ = 0.0, f_p2_ = 0.0;

  friend SolutionSpec make_times_exp_preset(const std::string&, double, double);
};

struct ResidualReport {
  double max_abs_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  long samples = 0;
};

/// Max |eq_residual| over the window with closed-form jets.
ResidualReport verify_residual(const SolutionSpec& spec, const SampleWindow& window, double tol);

/// The default catalog: at least one member of every family (both sqrt signs).
std::vector<SolutionSpec> default_catalog();

/// Pointwise invariance defect |eta - tau u_t - xi u_x| of the generator's
/// symmetry condition on the solution, maximised over the window; zero exactly
/// when the solution is invariant under the generator's flow. Here
/// tau = a2 + a3 t, xi = a1, eta = -a3 u.
double invariance_defect(const SolutionSpec& spec, const alg::AlgebraVec& gen,
                         const SampleWindow& window);

/// JSON preset form of f for TimesExpX ("constant", "power", "exp", "sin_offset").
SolutionSpec make_times_exp_preset(const std::string& form, double p1, double p2);

} // namespace novikov::sol
