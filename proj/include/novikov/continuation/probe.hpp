#pragma once

#include <string>

#include "novikov/core/field.hpp"

namespace novikov::uc {

struct ProbeInterval {
  double a;
  double b;
  ProbeInterval(double a_, double b_);
};

/// Window kernel S_{a,b}(y) = G(b - y) - G(a - y): identically zero for y < a,
/// strictly positive for y > b (= e^{a-y}(e^{b-a} - 1)), sign-indefinite only
/// inside [a, b].
double window_kernel(const ProbeInterval& iv, double y);

/// Closed-form L1 norm, 2 (1 - e^{a-b}).
double window_kernel_l1(const ProbeInterval& iv);

/// F(x) = (G * u^2)(x) on the snapshot's grid.
Field F_of(const FieldHistory& h, int snapshot_index);
Field F_of(const Field& u);

struct RepresentationCheck {
  double a_used, b_used;      // window endpoints snapped to grid nodes
  double lhs;                 // F(b) - F(a)
  double rhs;                 // integral of S_{a,b} u^2
  double residual_abs;
  double residual_rel;        // relative to max(|lhs|, |rhs|, floor)
};

/// Both sides of F(b) - F(a) = int S_{a,b}(y) u(y)^2 dy by the same trapezoid
/// rule (window endpoints snapped to nodes).
RepresentationCheck representation_check(const Field& u, const ProbeInterval& iv);

enum class VerdictKind { ForcedZero, NonzeroMass, Inapplicable };

const char* verdict_name(VerdictKind v);

struct Verdict {
  VerdictKind kind;
  std::string reason;
  double sup_u_window = 0.0;   // sup |u| on [a, b]
  double F_a = 0.0, F_b = 0.0;
  double tail_integral = 0.0;  // int_{y > b} S u^2
  double s_l1 = 0.0;
  double sup_u_right = 0.0;    // sup |u| on x > b
};

/// Vanishing-window diagnostic: when u ~ 0 on [a, b] and F(a), F(b) ~ 0 (all
/// below eps0), positivity of S beyond b forces the weighted right mass of u^2
/// to be negligible; reports "forced-zero" when it is. Hypothesis failures
/// yield "inapplicable".
Verdict continuation_diagnostic(const Field& u, const ProbeInterval& iv, double eps0 = 1e-8);

std::string to_json(const Verdict& v);

} // namespace novikov::uc
