#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "novikov/kernels/kernels.hpp"

using namespace novikov;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                               double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

// sizes chosen to hit all remainder branches of the 4- and 8-wide loops
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 64, 67, 1024, 4097};

} // namespace

TEST_CASE("scalar and avx2 kernel variants agree to rounding") {
  const kern::Kernels* avx = kern::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 unavailable on this host; equivalence suite skipped");
    return;
  }
  const kern::Kernels& ref = kern::scalar_kernels();
  std::mt19937_64 rng(20240811);

  for (std::size_t n : kSizes) {
    CAPTURE(n);
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);

    // dot: tolerance scales with the absolute-value sum (reassociation + FMA)
    {
      double sabs = 0.0;
      for (std::size_t i = 0; i < n; ++i) sabs += std::abs(a[i] * b[i]);
      const double d0 = ref.dot(a.data(), b.data(), n);
      const double d1 = avx->dot(a.data(), b.data(), n);
      CHECK(std::abs(d0 - d1) <= 1e-13 * (1.0 + sabs));
    }
    {
      auto y0 = random_vec(rng, n);
      auto y1 = y0;
      ref.axpy(y0.data(), 0.37, a.data(), n);
      avx->axpy(y1.data(), 0.37, a.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(y0[i] == doctest::Approx(y1[i]).epsilon(1e-15));
    }
    {
      std::vector<double> z0(n), z1(n);
      ref.xpay(z0.data(), a.data(), -1.25, b.data(), n);
      avx->xpay(z1.data(), a.data(), -1.25, b.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(z0[i] == doctest::Approx(z1[i]).epsilon(1e-15));
    }
    {
      const auto k1 = random_vec(rng, n), k2 = random_vec(rng, n), k3 = random_vec(rng, n),
                 k4 = random_vec(rng, n);
      std::vector<double> u0(n), u1(n);
      ref.rk4_combine(u0.data(), a.data(), 1e-3, k1.data(), k2.data(), k3.data(), k4.data(), n);
      avx->rk4_combine(u1.data(), a.data(), 1e-3, k1.data(), k2.data(), k3.data(), k4.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(u0[i] - u1[i]) <= 1e-15 * (1.0 + std::abs(u0[i])));
    }
    {
      std::vector<double> z0(n), z1(n);
      ref.mul(z0.data(), a.data(), b.data(), n);
      avx->mul(z1.data(), a.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(z0[i] == z1[i]); // single product, exact
    }
  }
}

TEST_CASE("stencil kernels agree across variants") {
  const kern::Kernels* avx = kern::avx2_kernels();
  if (avx == nullptr) return;
  std::mt19937_64 rng(7);
  for (int r : {1, 2, 3}) {
    for (std::size_t n : {std::size_t(16), std::size_t(101), std::size_t(1024)}) {
      const auto f = random_vec(rng, n);
      std::vector<double> w(static_cast<std::size_t>(2 * r + 1));
      for (double& x : w) x = std::uniform_real_distribution<double>(-2, 2)(rng);
      std::vector<double> o0(n, 0.0), o1(n, 0.0);
      kern::scalar_kernels().stencil(o0.data(), f.data(), w.data(), r, r, n - r);
      avx->stencil(o1.data(), f.data(), w.data(), r, r, n - r);
      for (std::size_t i = r; i < n - r; ++i)
        CHECK(std::abs(o0[i] - o1[i]) <= 1e-14 * (1.0 + std::abs(o0[i])));
    }
  }
}

TEST_CASE("dispatch reports a valid table") {
  const kern::Kernels& k = kern::active();
  CHECK(k.dot != nullptr);
  CHECK(k.stencil != nullptr);
  const char* name = kern::isa_name(kern::active_isa());
  CHECK((std::string(name) == "scalar" || std::string(name) == "avx2"));
}
