#include "novikov/core/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace novikov {

double interp_cubic(const SpaceGrid& grid, std::span<const double> values, double x) {
  const int n = grid.size();
  const double L = grid.half_length();
  if (x < -L || x > L) throw std::out_of_range("interp_cubic: point outside the grid");
  const double dx = grid.dx();
  int i0 = static_cast<int>(std::floor((x + L) / dx)) - 1;
  i0 = std::clamp(i0, 0, n - 4);
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double xk = grid.node(i0 + k);
    double lk = 1.0;
    for (int m = 0; m < 4; ++m) {
      if (m == k) continue;
      lk *= (x - grid.node(i0 + m)) / (xk - grid.node(i0 + m));
    }
    acc += lk * values[static_cast<std::size_t>(i0 + k)];
  }
  return acc;
}

double interp_history(const FieldHistory& h, double t, double x) {
  const int m = h.snapshot_count();
  if (m == 0) throw std::invalid_argument("interp_history: empty history");
  if (t <= h.time(0)) return interp_cubic(h.snapshot(0), x);
  if (t >= h.time(m - 1)) return interp_cubic(h.snapshot(m - 1), x);
  int lo = 0, hi = m - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (h.time(mid) <= t ? lo : hi) = mid;
  }
  const double t0 = h.time(lo), t1 = h.time(hi);
  const double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * interp_cubic(h.snapshot(lo), x) + w * interp_cubic(h.snapshot(hi), x);
}

} // namespace novikov
