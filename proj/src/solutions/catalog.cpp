#include "novikov/solutions/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "novikov/solutions/reductions.hpp"

namespace novikov::sol {

const char* kind_name(SolKind kind) {
  switch (kind) {
    case SolKind::Constant: return "constant";
    case SolKind::ExpX: return "exp_x";
    case SolKind::ExpHalfNeg: return "exp_half_neg";
    case SolKind::ExpOverPower: return "exp_over_power";
    case SolKind::TravellingExp: return "travelling_exp";
    case SolKind::SqrtDecay: return "sqrt_decay";
    case SolKind::SqrtGrow: return "sqrt_grow";
    case SolKind::TimesExpX: return "times_exp_x";
    case SolKind::TravellingImplicit: return "travelling_implicit";
  }
  return "unknown";
}

std::string SolutionSpec::label() const {
  std::string s = kind_name(kind_);
  switch (kind_) {
    case SolKind::Constant: return s + "(a=" + std::to_string(a_) + ")";
    case SolKind::ExpX: return s + "(a=" + std::to_string(a_) + ")";
    case SolKind::ExpHalfNeg: return s + "(a=" + std::to_string(a_) + ")";
    case SolKind::ExpOverPower:
      return s + "(a=" + std::to_string(a_) + ",alpha=" + std::to_string(alpha_) + ")";
    case SolKind::TravellingExp:
      return s + "(a=" + std::to_string(a_) + ",c=" + std::to_string(c_) + ")";
    case SolKind::SqrtDecay:
    case SolKind::SqrtGrow:
      return s + "(a=" + std::to_string(a_) + ",b=" + std::to_string(b_) +
             (sign_ > 0 ? ",+" : ",-") + ")";
    case SolKind::TimesExpX: return s + "(f=" + f_label_ + ")";
    case SolKind::TravellingImplicit:
      return s + "(c=" + std::to_string(c_) + ",C1=" + std::to_string(C1_) + ")";
  }
  return s;
}

Jet3 SolutionSpec::jet_at(double t, double x) const {
  Jet3 j;
  j.t = t;
  j.x = x;
  switch (kind_) {
    case SolKind::Constant: {
      j.u = a_;
      break;
    }
    case SolKind::ExpX: {
      const double e = a_ * std::exp(x);
      j.u = j.ux = j.uxx = j.uxxx = e;
      break;
    }
    case SolKind::ExpHalfNeg: {
      const double e = a_ * std::exp(-0.5 * x);
      j.u = e;
      j.ux = -0.5 * e;
      j.uxx = 0.25 * e;
      j.uxxx = -0.125 * e;
      break;
    }
    case SolKind::ExpOverPower: {
      if (!(t > 0.0)) throw std::domain_error(label() + ": requires t > 0");
      const double e = a_ * std::exp(x) / std::pow(t, alpha_ + 1.0);
      j.u = j.ux = j.uxx = j.uxxx = e;
      j.ut = j.utx = j.utxx = -(alpha_ + 1.0) * e / t;
      break;
    }
    case SolKind::TravellingExp: {
      const double e = a_ * std::exp(x - c_ * t);
      j.u = j.ux = j.uxx = j.uxxx = e;
      j.ut = j.utx = j.utxx = -c_ * e;
      break;
    }
    case SolKind::SqrtDecay: {
      const double r = a_ * std::exp(-x);
      const double w = r + b_;
      if (!(w > 0.0)) throw std::domain_error(label() + ": radicand must stay positive");
      const double u = static_cast<double>(sign_) * std::sqrt(w);
      j.u = u;
      j.ux = -r / (2.0 * u);
      j.uxx = r / (2.0 * u) - r * r / (4.0 * u * u * u);
      j.uxxx = -r / (2.0 * u) + 3.0 * r * r / (4.0 * u * u * u) -
               3.0 * r * r * r / (8.0 * std::pow(u, 5));
      break;
    }
    case SolKind::SqrtGrow: {
      const double r = a_ * std::exp(2.0 * x);
      const double w = r + b_;
      if (!(w > 0.0)) throw std::domain_error(label() + ": radicand must stay positive");
      const double u = static_cast<double>(sign_) * std::sqrt(w);
      j.u = u;
      j.ux = r / u;
      j.uxx = 2.0 * r / u - r * r / (u * u * u);
      j.uxxx = 4.0 * r / u - 6.0 * r * r / (u * u * u) + 3.0 * r * r * r / std::pow(u, 5);
      break;
    }
    case SolKind::TimesExpX: {
      const double e = std::exp(x);
      const double ft = f_(t), fpt = fprime_(t);
      j.u = j.ux = j.uxx = j.uxxx = ft * e;
      j.ut = j.utx = j.utxx = fpt * e;
      break;
    }
    case SolKind::TravellingImplicit: {
      const double z = x - c_ * t;
      const double th = implicit_travelling_theta(c_, C1_, anchor_z_, anchor_theta_, z);
      const double den = c_ + 2.0 * th;
      if (std::abs(den) < 1e-6)
        throw std::domain_error(label() + ": singular profile denominator");
      // The profile satisfies a first-order ODE; all higher jets follow
      // algebraically, so the jet solves the PDE exactly whatever the small
      // integration error in theta itself.
      const double q = 2.0 * th * th + c_ * th - C1_;
      const double th1 = q / den;
      const double th2 = th1 * (den * den + 2.0 * C1_) / (den * den);
      const double th3 = th2 * (den * den + 2.0 * C1_) / (den * den) -
                         8.0 * C1_ * th1 * th1 / (den * den * den);
      j.u = th;
      j.ux = th1;
      j.uxx = th2;
      j.uxxx = th3;
      j.ut = -c_ * th1;
      j.utx = -c_ * th2;
      j.utxx = -c_ * th3;
      break;
    }
  }
  if (!j.finite()) throw std::domain_error(label() + ": non-finite jet");
  return j;
}

alg::SolutionEvaluator SolutionSpec::evaluator() const {
  SolutionSpec copy = *this;
  return [copy](double t, double x) { return copy.jet_at(t, x); };
}

SampleWindow SolutionSpec::default_window() const {
  switch (kind_) {
    case SolKind::Constant: return {-1.0, 1.0, 3, -5.0, 5.0, 201};
    case SolKind::ExpX: return {-1.0, 1.0, 3, -3.0, 3.0, 201};
    case SolKind::ExpHalfNeg: return {-1.0, 1.0, 3, -3.0, 3.0, 201};
    case SolKind::ExpOverPower: return {0.5, 2.0, 7, -2.0, 2.0, 201};
    case SolKind::TravellingExp: return {0.0, 1.0, 5, -3.0, 3.0, 201};
    case SolKind::SqrtDecay: return {-1.0, 1.0, 3, -2.0, 4.0, 201};
    case SolKind::SqrtGrow: return {-1.0, 1.0, 3, -4.0, 2.0, 201};
    case SolKind::TimesExpX: return {0.0, 3.0, 7, -2.0, 2.0, 201};
    case SolKind::TravellingImplicit: return {0.0, 0.4, 5, -0.6, 0.6, 201};
  }
  return {};
}

SolutionSpec SolutionSpec::constant(double a) {
  SolutionSpec s;
  s.kind_ = SolKind::Constant;
  s.a_ = a;
  return s;
}

SolutionSpec SolutionSpec::exp_x(double a) {
  SolutionSpec s;
  s.kind_ = SolKind::ExpX;
  s.a_ = a;
  return s;
}

SolutionSpec SolutionSpec::exp_half_neg(double a) {
  SolutionSpec s;
  s.kind_ = SolKind::ExpHalfNeg;
  s.a_ = a;
  return s;
}

SolutionSpec SolutionSpec::exp_over_power(double a, double alpha) {
  SolutionSpec s;
  s.kind_ = SolKind::ExpOverPower;
  s.a_ = a;
  s.alpha_ = alpha;
  return s;
}

SolutionSpec SolutionSpec::travelling_exp(double a, double c) {
  SolutionSpec s;
  s.kind_ = SolKind::TravellingExp;
  s.a_ = a;
  s.c_ = c;
  return s;
}

namespace {
void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sqrt family: sign must be +-1");
}
} // namespace

SolutionSpec SolutionSpec::sqrt_decay(double a, double b, int sign) {
  require_sign(sign);
  SolutionSpec s;
  s.kind_ = SolKind::SqrtDecay;
  s.a_ = a;
  s.b_ = b;
  s.sign_ = sign;
  return s;
}

SolutionSpec SolutionSpec::sqrt_grow(double a, double b, int sign) {
  require_sign(sign);
  SolutionSpec s;
  s.kind_ = SolKind::SqrtGrow;
  s.a_ = a;
  s.b_ = b;
  s.sign_ = sign;
  return s;
}

SolutionSpec SolutionSpec::times_exp_x(std::function<double(double)> f,
                                       std::function<double(double)> fprime,
                                       std::string f_label) {
  if (!f || !fprime) throw std::invalid_argument("times_exp_x: both f and f' are required");
  // analytic-pair contract: f' must match a centered difference of f
  const double h = 1e-5;
  for (double t : {0.6, 1.1, 1.9}) {
    const double fd = (f(t + h) - f(t - h)) / (2.0 * h);
    const double scale = std::max({1.0, std::abs(fprime(t)), std::abs(f(t))});
    if (std::abs(fd - fprime(t)) > 1e-5 * scale)
      throw std::invalid_argument("times_exp_x: f' does not match finite differences of f");
  }
  SolutionSpec s;
  s.kind_ = SolKind::TimesExpX;
  s.f_ = std::move(f);
  s.fprime_ = std::move(fprime);
  s.f_label_ = std::move(f_label);
  return s;
}

SolutionSpec SolutionSpec::travelling_implicit(double c, double C1, double theta_anchor,
                                               double anchor_z) {
  if (std::abs(c + 2.0 * theta_anchor) < 1e-6)
    throw std::domain_error("travelling_implicit: singular profile denominator at anchor");
  SolutionSpec s;
  s.kind_ = SolKind::TravellingImplicit;
  s.c_ = c;
  s.C1_ = C1;
  s.anchor_theta_ = theta_anchor;
  s.anchor_z_ = anchor_z;
  return s;
}

ResidualReport verify_residual(const SolutionSpec& spec, const SampleWindow& w, double tol) {
  ResidualReport rep;
  rep.tol = tol;
  for (int it = 0; it < w.nt; ++it) {
    const double t = w.nt == 1 ? w.t0 : w.t0 + (w.t1 - w.t0) * it / double(w.nt - 1);
    for (int ix = 0; ix < w.nx; ++ix) {
      const double x = w.nx == 1 ? w.x0 : w.x0 + (w.x1 - w.x0) * ix / double(w.nx - 1);
      const double r = std::abs(eq_residual(spec.jet_at(t, x)));
      rep.max_abs_residual = std::max(rep.max_abs_residual, r);
      ++rep.samples;
    }
  }
  rep.pass = rep.max_abs_residual <= tol;
  return rep;
}

std::vector<SolutionSpec> default_catalog() {
  std::vector<SolutionSpec> cat;
  cat.push_back(SolutionSpec::constant(3.0));
  cat.push_back(SolutionSpec::exp_x(1.0));
  cat.push_back(SolutionSpec::exp_half_neg(5.0));
  cat.push_back(SolutionSpec::exp_over_power(1.0, 1.5));
  cat.push_back(SolutionSpec::exp_over_power(1.0, 0.0)); // u = e^x / t
  cat.push_back(SolutionSpec::travelling_exp(1.0, 2.0));
  cat.push_back(SolutionSpec::sqrt_decay(2.0, 1.0, +1));
  cat.push_back(SolutionSpec::sqrt_decay(2.0, 1.0, -1));
  cat.push_back(SolutionSpec::sqrt_grow(1.0, 0.5, +1));
  cat.push_back(SolutionSpec::sqrt_grow(1.0, 0.5, -1));
  cat.push_back(make_times_exp_preset("sin_offset", 2.0, 0.0));
  cat.push_back(SolutionSpec::travelling_implicit(1.0, 1.0, 2.0));
  return cat;
}

double invariance_defect(const SolutionSpec& spec, const alg::AlgebraVec& gen,
                         const SampleWindow& w) {
  double worst = 0.0;
  for (int it = 0; it < w.nt; ++it) {
    const double t = w.nt == 1 ? w.t0 : w.t0 + (w.t1 - w.t0) * it / double(w.nt - 1);
    for (int ix = 0; ix < w.nx; ++ix) {
      const double x = w.nx == 1 ? w.x0 : w.x0 + (w.x1 - w.x0) * ix / double(w.nx - 1);
      const Jet3 j = spec.jet_at(t, x);
      const double tau = gen.a2 + gen.a3 * t;
      const double xi = gen.a1;
      const double eta = -gen.a3 * j.u;
      worst = std::max(worst, std::abs(eta - tau * j.ut - xi * j.ux));
    }
  }
  return worst;
}

SolutionSpec make_times_exp_preset(const std::string& form, double p1, double p2) {
  std::function<double(double)> f, fp;
  std::string lbl;
  if (form == "constant") {
    f = [p1](double) { return p1; };
    fp = [](double) { return 0.0; };
    lbl = "const";
  } else if (form == "power") {
    // f = p1 * t^{p2}
    f = [p1, p2](double t) { return p1 * std::pow(t, p2); };
    fp = [p1, p2](double t) { return p1 * p2 * std::pow(t, p2 - 1.0); };
    lbl = "power";
  } else if (form == "exp") {
    // f = p1 * e^{p2 t}
    f = [p1, p2](double t) { return p1 * std::exp(p2 * t); };
    fp = [p1, p2](double t) { return p1 * p2 * std::exp(p2 * t); };
    lbl = "exp";
  } else if (form == "sin_offset") {
    // f = sin t + p1
    f = [p1](double t) { return std::sin(t) + p1; };
    fp = [](double t) { return std::cos(t); };
    lbl = "sin_offset";
  } else {
    throw std::invalid_argument("times_exp_x preset: unknown form '" + form + "'");
  }
  SolutionSpec s = SolutionSpec::times_exp_x(std::move(f), std::move(fp), lbl);
  s.f_form_ = form;
  s.f_p1_ = p1;
  s.f_p2_ = p2;
  return s;
}

nlohmann::json SolutionSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind_);
  switch (kind_) {
    case SolKind::Constant:
    case SolKind::ExpX:
    case SolKind::ExpHalfNeg: j["a"] = a_; break;
    case SolKind::ExpOverPower:
      j["a"] = a_;
      j["alpha"] = alpha_;
      break;
    case SolKind::TravellingExp:
      j["a"] = a_;
      j["c"] = c_;
      break;
    case SolKind::SqrtDecay:
    case SolKind::SqrtGrow:
      j["a"] = a_;
      j["b"] = b_;
      j["sign"] = sign_;
      break;
    case SolKind::TimesExpX:
      if (f_form_.empty())
        throw std::invalid_argument("to_json: only preset f forms serialize");
      j["f"] = {{"form", f_form_}, {"p1", f_p1_}, {"p2", f_p2_}};
      break;
    case SolKind::TravellingImplicit:
      j["c"] = c_;
      j["C1"] = C1_;
      j["theta_anchor"] = anchor_theta_;
      j["anchor_z"] = anchor_z_;
      break;
  }
  return j;
}

SolutionSpec SolutionSpec::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return constant(j.at("a").get<double>());
  if (kind == "exp_x") return exp_x(j.at("a").get<double>());
  if (kind == "exp_half_neg") return exp_half_neg(j.at("a").get<double>());
  if (kind == "exp_over_power")
    return exp_over_power(j.at("a").get<double>(), j.at("alpha").get<double>());
  if (kind == "travelling_exp")
    return travelling_exp(j.at("a").get<double>(), j.at("c").get<double>());
  if (kind == "sqrt_decay")
    return sqrt_decay(j.at("a").get<double>(), j.at("b").get<double>(), j.at("sign").get<int>());
  if (kind == "sqrt_grow")
    return sqrt_grow(j.at("a").get<double>(), j.at("b").get<double>(), j.at("sign").get<int>());
  if (kind == "times_exp_x") {
    const auto& f = j.at("f");
    return make_times_exp_preset(f.at("form").get<std::string>(), f.value("p1", 0.0),
                                 f.value("p2", 0.0));
  }
  if (kind == "travelling_implicit")
    return travelling_implicit(j.at("c").get<double>(), j.at("C1").get<double>(),
                               j.at("theta_anchor").get<double>(), j.value("anchor_z", 0.0));
  throw std::invalid_argument("SolutionSpec::from_json: unknown kind '" + kind + "'");
}

} // namespace novikov::sol
