#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "novikov/kernels/kernels.hpp"

namespace novikov::kern {

const Kernels* avx2_kernels_impl(); // defined in kernels_avx2.cpp

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa select() {
  const char* env = std::getenv("NOVIKOV_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  if (env != nullptr && std::strcmp(env, "avx2") == 0) {
    if (avx2_kernels_impl() == nullptr || !cpu_has_avx2_fma())
      throw std::runtime_error("NOVIKOV_ISA=avx2 requested but AVX2/FMA is unavailable");
    return Isa::Avx2;
  }
  // "auto" or unset
  if (avx2_kernels_impl() != nullptr && cpu_has_avx2_fma()) return Isa::Avx2;
  return Isa::Scalar;
}

} // namespace

Isa active_isa() {
  static const Isa isa = select();
  return isa;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const Kernels* avx2_kernels() {
  return cpu_has_avx2_fma() ? avx2_kernels_impl() : nullptr;
}

const Kernels& active() {
  static const Kernels& table =
      (active_isa() == Isa::Avx2) ? *avx2_kernels_impl() : scalar_kernels();
  return table;
}

} // namespace novikov::kern
