#include "novikov/conservation/currents.hpp"

#include <cmath>
#include <stdexcept>

namespace novikov::cons {

const char* current_name(CurrentId id) {
  switch (id) {
    case CurrentId::Current1: return "current1";
    case CurrentId::Current2: return "current2";
    case CurrentId::Current3: return "current3";
  }
  return "unknown";
}

CurrentPair::CurrentPair(CurrentId id, TimeWeight weight) : id_(id), weight_(std::move(weight)) {
  if (!weight_.f || !weight_.fprime)
    throw std::invalid_argument("CurrentPair: weight needs both f and f'");
}

double CurrentPair::density(const Jet3& j) const {
  switch (id_) {
    case CurrentId::Current1: return j.u - j.uxx;
    case CurrentId::Current2: return std::exp(-2.0 * j.x) * (j.u + 2.0 * j.ux + j.uxx);
    case CurrentId::Current3: return weight_.f(j.t) * std::exp(j.x) * (j.u - j.uxx);
  }
  return 0.0;
}

double CurrentPair::flux(const Jet3& j) const {
  switch (id_) {
    case CurrentId::Current1:
      return 2.0 * j.ux * j.ux - 2.0 * j.u * j.u - 2.0 * j.u * j.ux + 2.0 * j.u * j.uxx;
    case CurrentId::Current2:
      return 2.0 * std::exp(-2.0 * j.x) *
             (j.ut - 3.0 * j.ux * j.ux - 3.0 * j.u * j.ux + j.utx - 3.0 * j.u * j.uxx);
    case CurrentId::Current3:
      return std::exp(j.x) *
             (weight_.f(j.t) * (2.0 * j.ux * j.ux - 4.0 * j.u * j.ux + 2.0 * j.u * j.uxx) -
              weight_.fprime(j.t) * (j.u - j.ux));
  }
  return 0.0;
}

double CurrentPair::multiplier(double t, double x) const {
  switch (id_) {
    case CurrentId::Current1: return 1.0;
    case CurrentId::Current2: return -3.0 * std::exp(-2.0 * x);
    case CurrentId::Current3: return weight_.f(t) * std::exp(x);
  }
  return 0.0;
}

double CurrentPair::total_divergence(const Jet3& j) const {
  return total_divergence_with(j, weight_.f(j.t), weight_.fprime(j.t));
}

double CurrentPair::total_divergence_with(const Jet3& j, double f, double fp) const {
  switch (id_) {
    case CurrentId::Current1: {
      const double dt_c0 = j.ut - j.utxx;
      const double dx_c1 = 4.0 * j.ux * j.uxx - 4.0 * j.u * j.ux - 2.0 * j.ux * j.ux -
                           2.0 * j.u * j.uxx + 2.0 * j.ux * j.uxx + 2.0 * j.u * j.uxxx;
      return dt_c0 + dx_c1;
    }
    case CurrentId::Current2: {
      const double w = std::exp(-2.0 * j.x);
      const double dt_c0 = w * (j.ut + 2.0 * j.utx + j.utxx);
      const double inner = j.ut - 3.0 * j.ux * j.ux - 3.0 * j.u * j.ux + j.utx -
                           3.0 * j.u * j.uxx;
      const double inner_x = j.utx - 6.0 * j.ux * j.uxx - 3.0 * j.ux * j.ux -
                             3.0 * j.u * j.uxx + j.utxx - 3.0 * j.ux * j.uxx -
                             3.0 * j.u * j.uxxx;
      const double dx_c1 = -4.0 * w * inner + 2.0 * w * inner_x;
      return dt_c0 + dx_c1;
    }
    case CurrentId::Current3: {
      const double w = std::exp(j.x);
      const double dt_c0 = w * (fp * (j.u - j.uxx) + f * (j.ut - j.utxx));
      const double inner = f * (2.0 * j.ux * j.ux - 4.0 * j.u * j.ux + 2.0 * j.u * j.uxx) -
                           fp * (j.u - j.ux);
      const double inner_x =
          f * (4.0 * j.ux * j.uxx - 4.0 * j.ux * j.ux - 4.0 * j.u * j.uxx +
               2.0 * j.ux * j.uxx + 2.0 * j.u * j.uxxx) -
          fp * (j.ux - j.uxx);
      const double dx_c1 = w * inner + w * inner_x;
      return dt_c0 + dx_c1;
    }
  }
  return 0.0;
}

} // namespace novikov::cons
