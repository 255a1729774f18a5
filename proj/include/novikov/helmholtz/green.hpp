#pragma once

#include <span>

#include "novikov/core/field.hpp"

namespace novikov {

/// Kernels of the Helmholtz machinery on the line:
///   g(x) = e^{-|x|}/2 inverts 1 - d^2/dx^2 by convolution;
///   G(x) = (1 - sgn x) g(x) = g + g' is one-sided (vanishes for x > 0),
/// with sgn(0) := 0 so G(0) = 1/2.
enum class KernelKind { g, G };

double kernel_value(KernelKind kind, double x);

struct ConvOptions {
  /// Direct O(N^2) summation (SIMD-dispatched) instead of the O(N) exponential
  /// recursion. Both evaluate the same trapezoid sums; they agree to rounding.
  bool direct = false;
  /// Apply the second-order endpoint correction at the kernel kink, making the
  /// rule 4th-order accurate for smooth decaying data. Requires f' (computed
  /// internally when not supplied).
  bool corrected = true;
};

/// (kernel * f)(x_i) by trapezoid quadrature over the grid with zero extension
/// outside. `fprime` may pass a precomputed derivative of f to the correction.
Field convolve(KernelKind kind, const Field& f, const ConvOptions& opts = {},
               std::span<const double> fprime = {});

/// (1 - d^2/dx^2) f via 4th-order differences.
Field helmholtz_apply(const Field& f);

} // namespace novikov
