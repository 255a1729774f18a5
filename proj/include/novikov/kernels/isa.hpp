#pragma once

namespace novikov::kern {

enum class Isa { Scalar, Avx2 };

/// Instruction set actually used by the active kernel table. Selection happens
/// once per process: AVX2+FMA when the CPU supports it, scalar otherwise.
/// The environment variable NOVIKOV_ISA ("scalar", "avx2", "auto") overrides.
Isa active_isa();

const char* isa_name(Isa isa);

} // namespace novikov::kern
