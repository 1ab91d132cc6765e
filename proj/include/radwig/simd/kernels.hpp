#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation and, where the target supports it, an AVX2/FMA (x86-64) or
// NEON (aarch64) variant. The variant is chosen once at runtime from CPU
// features; tests compare every variant against the scalar reference.

#include <complex>
#include <span>

namespace radwig::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa) noexcept;

/// Variants compiled into this build and usable on this CPU.
bool isa_available(Isa isa) noexcept;

/// Variant used by the dispatching entry points below.
Isa active_isa() noexcept;

/// Pin the dispatcher to `isa` (must be available). Not meant to be flipped
/// while other threads are inside a kernel.
void force_isa(Isa isa);

/// Restore CPU-feature based selection.
void reset_isa() noexcept;

/// re[j] += Re(c·e^{i(θ0 + jΔθ)}) and, when `im` is non-empty,
/// im[j] += Im(c·e^{i(θ0 + jΔθ)}) for j in [0, re.size()).
/// This is one node of a DFT evaluated on a uniform output grid.
void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im);

/// y[j] += a·x[j]
void axpy(double a, std::span<const double> x, std::span<double> y);

// Per-variant entry points, exposed for the equivalence tests.
namespace scalar {
void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace scalar

#if defined(RADWIG_HAVE_AVX2)
namespace avx2 {
void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace avx2
#endif

#if defined(RADWIG_HAVE_NEON)
namespace neon {
void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace neon
#endif

}  // namespace radwig::simd
