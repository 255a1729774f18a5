#include <doctest.h>

#include <cmath>
#include <random>

#include "novikov/core/fd.hpp"
#include "novikov/core/field.hpp"
#include "novikov/core/grid.hpp"
#include "novikov/core/interp.hpp"
#include "novikov/core/jet.hpp"

using namespace novikov;

namespace {

// independently coded second residual implementation, different association
double eq_residual_alt(const Jet3& j) {
  double rhs = 2.0 * j.u * (2.0 * j.ux + j.uxx - j.uxxx);
  rhs += 2.0 * j.ux * (j.ux - 3.0 * j.uxx);
  return (j.ut - j.utxx) - rhs;
}

Jet3 random_jet(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  Jet3 j;
  j.t = d(rng);
  j.x = d(rng);
  j.u = d(rng);
  j.ux = d(rng);
  j.uxx = d(rng);
  j.uxxx = d(rng);
  j.ut = d(rng);
  j.utx = d(rng);
  j.utxx = d(rng);
  return j;
}

FieldHistory history_of(const GridPtr& g, double dt, int count,
                        const std::function<double(double, double)>& u) {
  FieldHistory h(g);
  for (int k = 0; k < count; ++k) {
    const double t = dt * k;
    h.push(sample_field(g, t, [&](double x) { return u(t, x); }));
  }
  return h;
}

} // namespace

TEST_CASE("grid construction and validation") {
  CHECK_THROWS_AS(SpaceGrid(0.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(SpaceGrid(1.0, 8), std::invalid_argument);
  SpaceGrid g(10.0, 101);
  CHECK(g.dx() == doctest::Approx(0.2));
  CHECK(g.node(0) == -10.0);
  CHECK(g.node(100) == 10.0);
  // uniform, strictly increasing
  for (int i = 1; i < g.size(); ++i) {
    CHECK(g.node(i) > g.node(i - 1));
    CHECK(g.node(i) - g.node(i - 1) == doctest::Approx(g.dx()).epsilon(1e-12));
  }
  CHECK(g.nearest_index(0.09) == 50);
  CHECK(g.nearest_index(-55.0) == 0);
}

TEST_CASE("equation residual on reference jets") {
  Jet3 zero;
  CHECK(eq_residual(zero) == 0.0);

  // u = e^{x - c t} at the origin with c = 1
  Jet3 j;
  j.u = j.ux = j.uxx = j.uxxx = 1.0;
  j.ut = j.utx = j.utxx = -1.0;
  CHECK(eq_residual(j) == doctest::Approx(0.0).epsilon(1e-15));

  // u = sqrt(e^{2x} + 1) at x = 0: r = 1, u = sqrt(2)
  const double u = std::sqrt(2.0);
  Jet3 q;
  q.u = u;
  q.ux = 1.0 / u;
  q.uxx = 2.0 / u - 1.0 / (u * u * u);
  q.uxxx = 4.0 / u - 6.0 / (u * u * u) + 3.0 / std::pow(u, 5);
  CHECK(std::abs(eq_residual(q)) < 1e-14);
}

TEST_CASE("residual matches an independently associated implementation") {
  std::mt19937_64 rng(123);
  for (int k = 0; k < 1000; ++k) {
    const Jet3 j = random_jet(rng);
    const double r1 = eq_residual(j);
    const double r2 = eq_residual_alt(j);
    CHECK(std::abs(r1 - r2) <= 1e-12 * std::max(1.0, std::abs(r1)));
  }
}

TEST_CASE("fd_weights reproduces the classical central coefficients") {
  const double xs5[] = {-2, -1, 0, 1, 2};
  auto w1 = fd_weights(0.0, std::span<const double>(xs5, 5), 1);
  const double c1[] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
  for (int i = 0; i < 5; ++i) CHECK(w1[i] == doctest::Approx(c1[i]).epsilon(1e-13));

  auto w2 = fd_weights(0.0, std::span<const double>(xs5, 5), 2);
  const double c2[] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
  for (int i = 0; i < 5; ++i) CHECK(w2[i] == doctest::Approx(c2[i]).epsilon(1e-13));

  const double xs7[] = {-3, -2, -1, 0, 1, 2, 3};
  auto w3 = fd_weights(0.0, std::span<const double>(xs7, 7), 3);
  const double c3[] = {-1.0 / 8, 1.0, -13.0 / 8, 0.0, 13.0 / 8, -1.0, 1.0 / 8};
  for (int i = 0; i < 7; ++i) CHECK(w3[i] == doctest::Approx(c3[i]).epsilon(1e-12));
}

TEST_CASE("diff_x: constants, sine, exponential") {
  auto g = make_grid(10.0, 1024);
  const Field c = sample_field(g, 0.0, [](double) { return 3.25; });
  for (int order : {1, 2, 3}) {
    const Field d = diff_x(c, order);
    CHECK(d.max_abs() < 1e-10);
  }

  const Field s = sample_field(g, 0.0, [](double x) { return std::sin(x); });
  const Field ds = diff_x(s, 1);
  double err = 0.0;
  for (int i = 0; i < g->size(); ++i)
    err = std::max(err, std::abs(ds[i] - std::cos(g->node(i))));
  CHECK(err < 1e-6);

  auto g5 = make_grid(5.0, 1024);
  const Field e = sample_field(g5, 0.0, [](double x) { return std::exp(x); });
  const Field d2 = diff_x(e, 2);
  double err2 = 0.0;
  for (int i = 5; i < g5->size() - 5; ++i)
    err2 = std::max(err2, std::abs(d2[i] - std::exp(g5->node(i))));
  CHECK(err2 < 1e-6);
}

TEST_CASE("diff_x converges at fourth order") {
  for (int order : {1, 2, 3}) {
    CAPTURE(order);
    double prev_err = 0.0;
    for (int level = 0; level < 2; ++level) {
      const int n = level == 0 ? 257 : 513; // halving dx
      auto g = make_grid(6.0, n);
      const Field s = sample_field(g, 0.0, [](double x) { return std::sin(1.3 * x); });
      const Field d = diff_x(s, order);
      double err = 0.0;
      for (int i = 0; i < n; ++i) {
        const double x = g->node(i);
        const double exact = order == 1   ? 1.3 * std::cos(1.3 * x)
                             : order == 2 ? -1.69 * std::sin(1.3 * x)
                                          : -2.197 * std::cos(1.3 * x);
        err = std::max(err, std::abs(d[i] - exact));
      }
      if (level == 1) CHECK(prev_err / err >= 12.0);
      prev_err = err;
    }
  }
}

TEST_CASE("diff_t on histories") {
  auto g = make_grid(4.0, 64);

  // constant in time
  auto hc = history_of(g, 1e-2, 5, [](double, double x) { return std::exp(-x * x); });
  CHECK(diff_t(hc, 2).max_abs() < 1e-12);

  // travelling exponential: u_t = -c u
  const double c = 1.0;
  auto h = history_of(g, 1e-3, 7,
                      [c](double t, double x) { return std::exp(x - c * t); });
  const Field dt3 = diff_t(h, 3);
  double err = 0.0;
  for (int i = 0; i < g->size(); ++i) {
    const double exact = -c * h.snapshot(3)[i];
    err = std::max(err, std::abs(dt3[i] - exact) / std::max(1.0, std::abs(exact)));
  }
  CHECK(err < 1e-6); // O(dt^2) headroom

  // one-sided ends agree at lower accuracy
  CHECK(diff_t(h, 0).size() == g->size());

  FieldHistory single(g);
  single.push(sample_field(g, 0.0, [](double x) { return x; }));
  CHECK_THROWS_AS(diff_t(single, 0), std::invalid_argument);
}

TEST_CASE("jet_field assembles full jets") {
  auto g = make_grid(4.0, 1024);

  // constant solution: all derivatives vanish
  auto hc = history_of(g, 1e-3, 5, [](double, double) { return 2.5; });
  const auto jets = jet_field(hc, 2);
  for (int i = 0; i < g->size(); i += 100) {
    CHECK(jets[static_cast<std::size_t>(i)].u == doctest::Approx(2.5));
    CHECK(std::abs(jets[static_cast<std::size_t>(i)].ux) < 1e-10);
    CHECK(std::abs(jets[static_cast<std::size_t>(i)].ut) < 1e-10);
  }

  // travelling exponential: interior residual small
  auto h = history_of(g, 1e-3, 7, [](double t, double x) { return std::exp(x - t); });
  const auto js = jet_field(h, 3);
  double worst = 0.0;
  for (int i = 8; i < g->size() - 8; ++i)
    worst = std::max(worst, std::abs(eq_residual(js[static_cast<std::size_t>(i)])));
  CHECK(worst < 1e-4);

  FieldHistory empty(g);
  CHECK_THROWS(jet_field(empty, 0));
}

TEST_CASE("cubic interpolation reproduces smooth samples") {
  auto g = make_grid(3.0, 301);
  const Field s = sample_field(g, 0.0, [](double x) { return std::sin(2.0 * x); });
  for (double x : {-2.97, -1.234, 0.0, 0.41, 2.999}) {
    CHECK(interp_cubic(s, x) == doctest::Approx(std::sin(2.0 * x)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(interp_cubic(s, 3.5), std::out_of_range);
}
