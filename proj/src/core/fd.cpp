#include "novikov/core/fd.hpp"

#include <cmath>
#include <stdexcept>

#include "novikov/kernels/kernels.hpp"

namespace novikov {

std::vector<double> fd_weights(double x0, std::span<const double> xs, int m) {
  const int n = static_cast<int>(xs.size()) - 1;
  if (n < m) throw std::invalid_argument("fd_weights: need more samples than derivative order");
  // c[j][k] = weight of sample j for the k-th derivative
  std::vector<std::vector<double>> c(xs.size(), std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[static_cast<std::size_t>(i)] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
              c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                    c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) / c2;
        c[static_cast<std::size_t>(i)][0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
             k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) / c3;
      c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) w[j] = c[j][static_cast<std::size_t>(m)];
  return w;
}

namespace {

constexpr int kAccuracy = 4;

int central_radius(int order) { return order == 3 ? 3 : 2; }

// Weights for integer offsets 0..w-1 evaluated at offset i, scaled by dx^-order.
std::vector<double> window_weights(int w, int i, int order, double dx) {
  std::vector<double> xs(static_cast<std::size_t>(w));
  for (int k = 0; k < w; ++k) xs[static_cast<std::size_t>(k)] = static_cast<double>(k);
  auto ws = fd_weights(static_cast<double>(i), xs, order);
  const double scale = std::pow(dx, -order);
  for (double& v : ws) v *= scale;
  return ws;
}

} // namespace

void diff_x_into(std::span<const double> values, double dx, int order, std::span<double> out) {
  if (order < 1 || order > 3) throw std::invalid_argument("diff_x: order must be 1, 2 or 3");
  const int n = static_cast<int>(values.size());
  const int r = central_radius(order);
  const int w = order + kAccuracy; // one-sided window width
  if (n < std::max(2 * r + 1, w)) throw std::invalid_argument("diff_x: grid too small for stencil");

  // interior
  {
    std::vector<double> xs(static_cast<std::size_t>(2 * r + 1));
    for (int k = -r; k <= r; ++k) xs[static_cast<std::size_t>(k + r)] = static_cast<double>(k);
    auto cw = fd_weights(0.0, xs, order);
    const double scale = std::pow(dx, -order);
    for (double& v : cw) v *= scale;
    kern::active().stencil(out.data(), values.data(), cw.data(), r,
                           static_cast<std::size_t>(r), static_cast<std::size_t>(n - r));
  }

  // ends: 4th-order stencils anchored at the boundary window
  for (int i = 0; i < r; ++i) {
    auto wl = window_weights(w, i, order, dx);
    double acc = 0.0;
    for (int k = 0; k < w; ++k) acc += wl[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = acc;

    auto wr = window_weights(w, w - 1 - i, order, dx);
    double accp = 0.0;
    for (int k = 0; k < w; ++k)
      accp += wr[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(n - w + k)];
    out[static_cast<std::size_t>(n - 1 - i)] = accp;
  }
}

Field diff_x(const Field& f, int order) {
  Field out(f.grid, f.t);
  diff_x_into(f.values, f.grid->dx(), order, out.values);
  return out;
}

Field diff_t(const FieldHistory& h, int snapshot_index) {
  const int m = h.snapshot_count();
  if (m < 3) throw std::invalid_argument("diff_t: need at least 3 snapshots");
  if (snapshot_index < 0 || snapshot_index >= m)
    throw std::out_of_range("diff_t: snapshot index out of range");
  const double dt = h.uniform_dt();
  const int n = h.grid()->size();
  Field out(h.grid(), h.time(snapshot_index));
  const int k = snapshot_index;
  if (k == 0) {
    const auto &s0 = h.snapshot(0).values, &s1 = h.snapshot(1).values, &s2 = h.snapshot(2).values;
    for (int i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(i);
      out[i] = (-3.0 * s0[j] + 4.0 * s1[j] - s2[j]) / (2.0 * dt);
    }
  } else if (k == m - 1) {
    const auto &s0 = h.snapshot(k).values, &s1 = h.snapshot(k - 1).values,
               &s2 = h.snapshot(k - 2).values;
    for (int i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(i);
      out[i] = (3.0 * s0[j] - 4.0 * s1[j] + s2[j]) / (2.0 * dt);
    }
  } else {
    const auto &sp = h.snapshot(k + 1).values, &sm = h.snapshot(k - 1).values;
    for (int i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(i);
      out[i] = (sp[j] - sm[j]) / (2.0 * dt);
    }
  }
  return out;
}

std::vector<Jet3> jet_field(const FieldHistory& h, int snapshot_index) {
  if (h.snapshot_count() == 0) throw std::invalid_argument("jet_field: empty history");
  const Field& s = h.snapshot(snapshot_index);
  const Field ux = diff_x(s, 1);
  const Field uxx = diff_x(s, 2);
  const Field uxxx = diff_x(s, 3);
  const Field ut = diff_t(h, snapshot_index);
  const Field utx = diff_x(ut, 1);
  const Field utxx = diff_x(ut, 2);
  const int n = s.size();
  std::vector<Jet3> jets(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Jet3& j = jets[static_cast<std::size_t>(i)];
    j.t = s.t;
    j.x = s.grid->node(i);
    j.u = s[i];
    j.ux = ux[i];
    j.uxx = uxx[i];
    j.uxxx = uxxx[i];
    j.ut = ut[i];
    j.utx = utx[i];
    j.utxx = utxx[i];
  }
  return jets;
}

} // namespace novikov
