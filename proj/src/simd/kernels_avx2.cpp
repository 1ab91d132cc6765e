#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "radwig/simd/kernels.hpp"

namespace radwig::simd::avx2 {

namespace {

// Lane phasors are re-anchored with exact sincos every kAnchor outputs, so
// the rotation recurrence never runs for more than kAnchor / 4 steps.
constexpr std::size_t kAnchor = 64;

}  // namespace

void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im) {
  const std::size_t n = re.size();
  const bool want_im = !im.empty();
  const __m256d cr = _mm256_set1_pd(c.real());
  const __m256d ci = _mm256_set1_pd(c.imag());
  const __m256d wr = _mm256_set1_pd(std::cos(4.0 * dtheta));
  const __m256d wi = _mm256_set1_pd(std::sin(4.0 * dtheta));

  std::size_t j = 0;
  while (j + 4 <= n) {
    alignas(32) double zr0[4];
    alignas(32) double zi0[4];
    for (int k = 0; k < 4; ++k) {
      const double theta = theta0 + static_cast<double>(j + k) * dtheta;
      zr0[k] = std::cos(theta);
      zi0[k] = std::sin(theta);
    }
    __m256d zr = _mm256_load_pd(zr0);
    __m256d zi = _mm256_load_pd(zi0);
    const std::size_t block_end = std::min(n, j + kAnchor);
    for (; j + 4 <= block_end; j += 4) {
      // Re(c z) = cr zr - ci zi ; Im(c z) = cr zi + ci zr
      __m256d acc_re = _mm256_loadu_pd(re.data() + j);
      acc_re = _mm256_fmadd_pd(cr, zr, acc_re);
      acc_re = _mm256_fnmadd_pd(ci, zi, acc_re);
      _mm256_storeu_pd(re.data() + j, acc_re);
      if (want_im) {
        __m256d acc_im = _mm256_loadu_pd(im.data() + j);
        acc_im = _mm256_fmadd_pd(cr, zi, acc_im);
        acc_im = _mm256_fmadd_pd(ci, zr, acc_im);
        _mm256_storeu_pd(im.data() + j, acc_im);
      }
      const __m256d nr = _mm256_fmsub_pd(zr, wr, _mm256_mul_pd(zi, wi));
      const __m256d ni = _mm256_fmadd_pd(zr, wi, _mm256_mul_pd(zi, wr));
      zr = nr;
      zi = ni;
    }
  }
  for (; j < n; ++j) {
    const double theta = theta0 + static_cast<double>(j) * dtheta;
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    re[j] += c.real() * cs - c.imag() * sn;
    if (want_im) im[j] += c.real() * sn + c.imag() * cs;
  }
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = y.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vx = _mm256_loadu_pd(x.data() + j);
    const __m256d vy = _mm256_loadu_pd(y.data() + j);
    _mm256_storeu_pd(y.data() + j, _mm256_fmadd_pd(va, vx, vy));
  }
  for (; j < n; ++j) y[j] += a * x[j];
}

}  // namespace radwig::simd::avx2
