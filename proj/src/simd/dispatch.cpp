#include <atomic>
#include <cstdlib>
#include <string_view>

#include "radwig/error.hpp"
#include "radwig/simd/kernels.hpp"

namespace radwig::simd {

namespace {

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(RADWIG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(RADWIG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

// RADWIG_ISA=scalar|avx2|neon overrides detection (ignored if unavailable).
Isa detect() noexcept {
  if (const char* env = std::getenv("RADWIG_ISA")) {
    const std::string_view want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa) && cpu_supports(isa)) return isa;
    }
  }
  if (cpu_supports(Isa::Avx2)) return Isa::Avx2;
  if (cpu_supports(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept { return cpu_supports(isa); }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!cpu_supports(isa)) {
    throw Error(std::string("kernel variant not available: ") + isa_name(isa));
  }
  current().store(isa, std::memory_order_relaxed);
}

void reset_isa() noexcept { current().store(detect(), std::memory_order_relaxed); }

void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im) {
  switch (active_isa()) {
#if defined(RADWIG_HAVE_AVX2)
    case Isa::Avx2:
      return avx2::phasor_accumulate(c, theta0, dtheta, re, im);
#endif
#if defined(RADWIG_HAVE_NEON)
    case Isa::Neon:
      return neon::phasor_accumulate(c, theta0, dtheta, re, im);
#endif
    default:
      return scalar::phasor_accumulate(c, theta0, dtheta, re, im);
  }
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  switch (active_isa()) {
#if defined(RADWIG_HAVE_AVX2)
    case Isa::Avx2:
      return avx2::axpy(a, x, y);
#endif
#if defined(RADWIG_HAVE_NEON)
    case Isa::Neon:
      return neon::axpy(a, x, y);
#endif
    default:
      return scalar::axpy(a, x, y);
  }
}

}  // namespace radwig::simd
