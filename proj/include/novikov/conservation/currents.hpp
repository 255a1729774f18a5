#pragma once

#include <functional>
#include <string>
#include <vector>

#include "novikov/core/field.hpp"
#include "novikov/core/jet.hpp"

namespace novikov::cons {

enum class CurrentId { Current1, Current2, Current3 };

const char* current_name(CurrentId id);

/// Time weight of the third current: a (f, f') pair, defaulting to f = 1.
struct TimeWeight {
  std::function<double(double)> f = [](double) { return 1.0; };
  std::function<double(double)> fprime = [](double) { return 0.0; };
  std::string label = "1";
};

/// A conserved current: density C0 and flux C1 with Dt C0 + Dx C1 equal to a
/// multiplier times the equation residual identically in jet space.
///   current1: (u - u_xx, 2u_x^2 - 2u^2 - 2uu_x + 2uu_xx),             lambda = 1
///   current2: (e^{-2x}(u + 2u_x + u_xx),
///              2e^{-2x}(u_t - 3u_x^2 - 3uu_x + u_tx - 3uu_xx)),       lambda = -3 e^{-2x}
///   current3: (f(t)e^x(u - u_xx),
///              e^x[f(2u_x^2 - 4uu_x + 2uu_xx) - f'(u - u_x)]),        lambda = f(t) e^x
class CurrentPair {
 public:
  CurrentPair(CurrentId id, TimeWeight weight = {});

  CurrentId id() const { return id_; }
  const TimeWeight& weight() const { return weight_; }

  double density(const Jet3& j) const;
  double flux(const Jet3& j) const;
  double multiplier(double t, double x) const;

  /// Dt C0 + Dx C1 by closed-form total-derivative expansion (everything needed
  /// lives inside Jet3). Equals multiplier(t,x) * eq_residual(j) identically.
  double total_divergence(const Jet3& j) const;

  /// total_divergence with the weight pair overridden pointwise; lets tests
  /// substitute independent random values for f and f'.
  double total_divergence_with(const Jet3& j, double f, double fprime) const;

 private:
  CurrentId id_;
  TimeWeight weight_;
};

} // namespace novikov::cons
