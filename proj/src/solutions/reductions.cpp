#include "novikov/solutions/reductions.hpp"

#include <cmath>
#include <stdexcept>

namespace novikov::sol {

double scaling_reduction_residual(double alpha, double theta, double theta1, double theta2,
                                  double theta3, double z) {
  const double a = alpha;
  const double z2 = z * z, z3 = z2 * z;
  return (a * a * a - 4.0 * a) * theta1 - 5.0 * a * z * theta2 - a * z2 * theta3 +
         (4.0 * a * a - 4.0 * a - 8.0) * theta * theta +
         (-2.0 * a - 18.0) * z2 * theta1 * theta1 +
         (4.0 * a * a - 10.0 * a - 38.0) * z * theta * theta1 +
         (-2.0 * a - 18.0) * z2 * theta * theta2 - 6.0 * z3 * theta1 * theta2 -
         2.0 * z3 * theta * theta3;
}

namespace {

constexpr double kDenominatorFloor = 1e-6;

double travelling_accel(double c, double C1, double th, double thp) {
  return (c * th + 2.0 * th * th - 2.0 * thp * thp + 2.0 * th * thp - C1) / (c + 2.0 * th);
}

} // namespace

OdeTrajectory travelling_ode_integrate(double c, double C1, double theta0, double theta0p,
                                       double z0, double z1, double dz) {
  if (std::abs(c + 2.0 * theta0) < kDenominatorFloor)
    throw std::domain_error("travelling_ode_integrate: singular denominator at start");
  if (!(dz > 0.0)) throw std::invalid_argument("travelling_ode_integrate: dz must be > 0");

  const double span = z1 - z0;
  const long steps = std::max(1L, std::lround(std::ceil(std::abs(span) / dz)));
  const double h = span / static_cast<double>(steps);

  OdeTrajectory out;
  out.z.reserve(static_cast<std::size_t>(steps) + 1);
  out.theta.reserve(static_cast<std::size_t>(steps) + 1);
  out.theta_p.reserve(static_cast<std::size_t>(steps) + 1);

  double z = z0, th = theta0, thp = theta0p;
  out.z.push_back(z);
  out.theta.push_back(th);
  out.theta_p.push_back(thp);
  for (long k = 0; k < steps; ++k) {
    const double k1t = thp, k1p = travelling_accel(c, C1, th, thp);
    const double k2t = thp + 0.5 * h * k1p,
                 k2p = travelling_accel(c, C1, th + 0.5 * h * k1t, thp + 0.5 * h * k1p);
    const double k3t = thp + 0.5 * h * k2p,
                 k3p = travelling_accel(c, C1, th + 0.5 * h * k2t, thp + 0.5 * h * k2p);
    const double k4t = thp + h * k3p,
                 k4p = travelling_accel(c, C1, th + h * k3t, thp + h * k3p);
    th += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    thp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    z = z0 + static_cast<double>(k + 1) * h;
    if (std::abs(c + 2.0 * th) < kDenominatorFloor || !std::isfinite(th) || !std::isfinite(thp)) {
      out.singular = true;
      break;
    }
    out.z.push_back(z);
    out.theta.push_back(th);
    out.theta_p.push_back(thp);
  }
  return out;
}

double travelling_first_integral(double c, double C1, double z, double theta, double theta_p) {
  return std::exp(z) * (-c * theta + c * theta_p - 2.0 * theta * theta +
                        2.0 * theta * theta_p + C1);
}

double implicit_travelling_theta(double c, double C1, double anchor_z, double anchor_theta,
                                 double z, double dz) {
  if (std::abs(c + 2.0 * anchor_theta) < kDenominatorFloor)
    throw std::domain_error("implicit_travelling_theta: singular denominator at anchor");
  auto slope = [&](double th) {
    const double den = c + 2.0 * th;
    if (std::abs(den) < kDenominatorFloor)
      throw std::domain_error("implicit_travelling_theta: singular denominator on path");
    return (2.0 * th * th + c * th - C1) / den;
  };
  const double span = z - anchor_z;
  if (span == 0.0) return anchor_theta;
  const long steps = std::max(1L, std::lround(std::ceil(std::abs(span) / dz)));
  const double h = span / static_cast<double>(steps);
  double th = anchor_theta;
  for (long k = 0; k < steps; ++k) {
    const double k1 = slope(th);
    const double k2 = slope(th + 0.5 * h * k1);
    const double k3 = slope(th + 0.5 * h * k2);
    const double k4 = slope(th + h * k3);
    th += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return th;
}

namespace {

// artanh continued to |y| > 1 via artanh(1/y); both branches share the
// derivative -1/(y^2-1) up to sign bookkeeping, so the combination below is an
// antiderivative of the separated profile equation on either side.
double atanh_ext(double y) {
  if (std::abs(y) < 1.0) return std::atanh(y);
  if (std::abs(y) > 1.0) return std::atanh(1.0 / y);
  throw std::domain_error("implicit relation: argument on the branch point");
}

} // namespace

double implicit_relation_residual(double c, double C1, double constant, double z, double theta) {
  const double disc = c * c + 8.0 * C1;
  if (!(disc > 0.0)) throw std::domain_error("implicit relation: needs c^2 + 8 C1 > 0");
  const double q = 2.0 * theta * theta + c * theta - C1;
  if (!(q > 0.0)) throw std::domain_error("implicit relation: log branch needs 2 th^2 + c th - C1 > 0");
  const double rt = std::sqrt(disc);
  return z - 0.5 * std::log(q) + (c / rt) * atanh_ext((c + 4.0 * theta) / rt) + constant;
}

double implicit_relation_constant(double c, double C1, double anchor_z, double anchor_theta) {
  return -implicit_relation_residual(c, C1, 0.0, anchor_z, anchor_theta);
}

} // namespace novikov::sol
