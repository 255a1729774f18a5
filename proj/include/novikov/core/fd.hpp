#pragma once

#include <span>
#include <vector>

#include "novikov/core/field.hpp"
#include "novikov/core/jet.hpp"

namespace novikov {

/// Finite-difference weights for the m-th derivative at evaluation point x0
/// given sample locations xs (Fornberg's recursion). Returned in sample order.
std::vector<double> fd_weights(double x0, std::span<const double> xs, int m);

/// Spatial derivative of given order (1, 2 or 3), 4th-order accurate: central
/// stencils in the interior, same-order one-sided stencils near the ends.
Field diff_x(const Field& f, int order);

void diff_x_into(std::span<const double> values, double dx, int order, std::span<double> out);

/// Time derivative of the k-th snapshot by second-order differences
/// (one-sided at the first and last snapshot). Needs >= 3 uniformly spaced
/// snapshots.
Field diff_t(const FieldHistory& h, int snapshot_index);

/// Full jet at every node of snapshot k: spatial derivatives from the snapshot,
/// mixed ones from diff_x applied to the diff_t field.
std::vector<Jet3> jet_field(const FieldHistory& h, int snapshot_index);

} // namespace novikov
