#pragma once

#include <vector>

namespace novikov::sol {

/// Left-hand side of the third-order ODE obtained by reducing the PDE under the
/// scaling family x -> x, t -> e^{eps} t combined with translation (the
/// "alpha X1 + X3" ansatz u = e^{-x/alpha} theta(z), z = t e^{-x/alpha}):
///   (a^3-4a) th' - 5 a z th'' - a z^2 th''' + (4a^2-4a-8) th^2
///   + (-2a-18) z^2 th'^2 + (4a^2-10a-38) z th th' + (-2a-18) z^2 th th''
///   - 6 z^3 th' th'' - 2 z^3 th th'''.
double scaling_reduction_residual(double alpha, double theta, double theta1, double theta2,
                                  double theta3, double z);

/// Trajectory of the travelling-wave profile ODE
///   theta'' = (c th + 2 th^2 - 2 th'^2 + 2 th th' - C1) / (c + 2 th),
/// integrated by fixed-step RK4. Integration halts with `singular` set when
/// |c + 2 theta| drops below 1e-6.
struct OdeTrajectory {
  std::vector<double> z;
  std::vector<double> theta;
  std::vector<double> theta_p;
  bool singular = false;
};

OdeTrajectory travelling_ode_integrate(double c, double C1, double theta0, double theta0p,
                                       double z0, double z1, double dz = 1e-4);

/// First integral of the travelling profile: e^z(-c th + c th' - 2 th^2 + 2 th th' + C1)
/// is constant along trajectories of the ODE above.
double travelling_first_integral(double c, double C1, double z, double theta, double theta_p);

/// theta(z) on the first-order branch theta' = (2 th^2 + c th - C1)/(2 th + c)
/// (the vanishing-first-integral case), integrated from an anchor value.
double implicit_travelling_theta(double c, double C1, double anchor_z, double anchor_theta,
                                 double z, double dz = 1e-4);

/// Residual of the closed-form implicit relation for that branch:
///   z - (1/2) ln(2 th^2 + c th - C1)
///     + c/sqrt(c^2+8 C1) * artanh-type((c+4 th)/sqrt(c^2+8 C1)) + C.
/// The inverse-hyperbolic term is continued by artanh(1/y) when |y| > 1 (the
/// relevant branch whenever 2 th^2 + c th - C1 > 0). Requires c^2 + 8 C1 > 0.
double implicit_relation_residual(double c, double C1, double constant, double z, double theta);

/// The constant fixing the implicit relation through (anchor_z, anchor_theta).
double implicit_relation_constant(double c, double C1, double anchor_z, double anchor_theta);

} // namespace novikov::sol
