#include <doctest.h>

#include <cmath>
#include <random>

#include "novikov/core/fd.hpp"
#include "novikov/helmholtz/green.hpp"

using namespace novikov;

namespace {
// adaptive-quadrature value of (G * e^{-y^2})(0) = int_0^inf e^{-y} e^{-y^2} dy
constexpr double kGConvGaussAt0 = 0.5456413607650470421;
} // namespace

TEST_CASE("kernel values and sign structure") {
  CHECK(kernel_value(KernelKind::g, 0.0) == 0.5);
  CHECK(kernel_value(KernelKind::g, 1.0) == doctest::Approx(0.5 * std::exp(-1.0)));
  CHECK(kernel_value(KernelKind::g, -1.0) == kernel_value(KernelKind::g, 1.0));

  CHECK(kernel_value(KernelKind::G, 0.0) == 0.5);
  CHECK(kernel_value(KernelKind::G, 0.5) == 0.0);
  CHECK(kernel_value(KernelKind::G, -0.5) == doctest::Approx(std::exp(-0.5)));

  // G = g + g' away from the kink, G > 0 left, G = 0 right
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-8.0, 8.0);
  for (int k = 0; k < 2000; ++k) {
    double x = d(rng);
    if (x == 0.0) continue;
    const double g = kernel_value(KernelKind::g, x);
    const double gp = -std::copysign(1.0, x) * g;
    CHECK(std::abs(kernel_value(KernelKind::G, x) - (g + gp)) < 1e-12);
    if (x < 0.0) CHECK(kernel_value(KernelKind::G, x) > 0.0);
    if (x > 0.0) CHECK(kernel_value(KernelKind::G, x) == 0.0);
  }
}

TEST_CASE("unit mass of g by quadrature") {
  auto g = make_grid(40.0, 4096);
  double sum = 0.0;
  for (int i = 0; i < g->size(); ++i) {
    const double v = kernel_value(KernelKind::g, g->node(i));
    sum += (i == 0 || i == g->size() - 1 ? 0.5 : 1.0) * v;
  }
  sum *= g->dx();
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("convolution: zero input, frozen oracle value, fast == direct") {
  auto g = make_grid(15.0, 2049);
  const Field zero(g, 0.0);
  CHECK(convolve(KernelKind::g, zero).max_abs() == 0.0);
  CHECK(convolve(KernelKind::G, zero).max_abs() == 0.0);

  const Field gauss = sample_field(g, 0.0, [](double x) { return std::exp(-x * x); });

  // corrected rule hits the adaptive-quadrature oracle at the centre node
  const Field conv = convolve(KernelKind::G, gauss);
  const int mid = g->nearest_index(0.0);
  REQUIRE(g->node(mid) == 0.0);
  CHECK(std::abs(conv[mid] - kGConvGaussAt0) < 1e-7);
  const Field convg = convolve(KernelKind::g, gauss);
  CHECK(std::abs(convg[mid] - kGConvGaussAt0) < 1e-7); // same value by symmetry

  // the plain trapezoid sum misses that target by orders of magnitude; the
  // kink correction is what restores 4th-order accuracy
  ConvOptions plain;
  plain.corrected = false;
  const Field conv_plain = convolve(KernelKind::G, gauss, plain);
  CHECK(std::abs(conv_plain[mid] - kGConvGaussAt0) > 1e-6);

  // fast recursion vs direct summation: identical trapezoid sums
  for (bool corrected : {false, true}) {
    for (KernelKind kind : {KernelKind::g, KernelKind::G}) {
      ConvOptions fast{false, corrected};
      ConvOptions direct{true, corrected};
      const Field a = convolve(kind, gauss, fast);
      const Field b = convolve(kind, gauss, direct);
      double diff = 0.0;
      for (int i = 0; i < g->size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
      CHECK(diff < 1e-10);
    }
  }
}

TEST_CASE("helmholtz apply and round trips") {
  auto g = make_grid(15.0, 2048);
  const Field c = sample_field(g, 0.0, [](double) { return 4.0; });
  const Field hc = helmholtz_apply(c);
  for (int i = 0; i < g->size(); i += 97) CHECK(hc[i] == doctest::Approx(4.0).epsilon(1e-10));

  auto gs = make_grid(10.0, 1024);
  const Field s = sample_field(gs, 0.0, [](double x) { return std::sin(x); });
  const Field hs = helmholtz_apply(s);
  double err = 0.0;
  for (int i = 0; i < gs->size(); ++i)
    err = std::max(err, std::abs(hs[i] - 2.0 * std::sin(gs->node(i))));
  CHECK(err < 1e-6);

  // g * (1 - d^2) f == f for decaying data
  const Field m = sample_field(g, 0.0, [](double x) { return std::exp(-x * x); });
  const Field round1 = convolve(KernelKind::g, helmholtz_apply(m));
  double e1 = 0.0;
  for (int i = 0; i < g->size(); ++i) e1 = std::max(e1, std::abs(round1[i] - m[i]));
  CHECK(e1 < 1e-5);

  // (1 - d^2)(g * m) == m
  const Field round2 = helmholtz_apply(convolve(KernelKind::g, m));
  double e2 = 0.0;
  for (int i = 0; i < g->size(); ++i) e2 = std::max(e2, std::abs(round2[i] - m[i]));
  CHECK(e2 < 1e-5);
}

TEST_CASE("convolution is linear and translation-equivariant") {
  auto g = make_grid(12.0, 1025);
  const Field f1 = sample_field(g, 0.0, [](double x) { return std::exp(-x * x); });
  const Field f2 = sample_field(g, 0.0, [](double x) { return std::exp(-2.0 * (x - 1) * (x - 1)); });

  Field combo(g, 0.0);
  for (int i = 0; i < g->size(); ++i) combo[i] = 2.0 * f1[i] - 0.5 * f2[i];
  const Field ca = convolve(KernelKind::g, combo);
  const Field c1 = convolve(KernelKind::g, f1);
  const Field c2 = convolve(KernelKind::g, f2);
  double lin_err = 0.0;
  for (int i = 0; i < g->size(); ++i)
    lin_err = std::max(lin_err, std::abs(ca[i] - (2.0 * c1[i] - 0.5 * c2[i])));
  CHECK(lin_err < 1e-12);

  // shifting the input by whole nodes shifts the output (interior nodes)
  const int shift = 32;
  Field shifted(g, 0.0);
  for (int i = shift; i < g->size(); ++i) shifted[i] = f1[i - shift];
  const Field cs = convolve(KernelKind::g, shifted);
  double eq_err = 0.0;
  for (int i = 300; i < g->size() - 300; ++i)
    eq_err = std::max(eq_err, std::abs(cs[i] - c1[i - shift]));
  CHECK(eq_err < 1e-6);
}
