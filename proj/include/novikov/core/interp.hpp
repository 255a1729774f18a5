#pragma once

#include <span>

#include "novikov/core/field.hpp"

namespace novikov {

/// Cubic Lagrange interpolation on the four grid nodes around x (window
/// clamped near the ends). Throws when x leaves the grid.
double interp_cubic(const SpaceGrid& grid, std::span<const double> values, double x);

inline double interp_cubic(const Field& f, double x) {
  return interp_cubic(*f.grid, f.values, x);
}

/// Cubic in x, linear between the two bracketing snapshots in t.
double interp_history(const FieldHistory& h, double t, double x);

} // namespace novikov
