#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "radwig/simd/kernels.hpp"

namespace radwig::simd::neon {

namespace {

constexpr std::size_t kAnchor = 64;

}  // namespace

void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im) {
  const std::size_t n = re.size();
  const bool want_im = !im.empty();
  const float64x2_t cr = vdupq_n_f64(c.real());
  const float64x2_t ci = vdupq_n_f64(c.imag());
  const float64x2_t wr = vdupq_n_f64(std::cos(2.0 * dtheta));
  const float64x2_t wi = vdupq_n_f64(std::sin(2.0 * dtheta));

  std::size_t j = 0;
  while (j + 2 <= n) {
    double zr0[2];
    double zi0[2];
    for (int k = 0; k < 2; ++k) {
      const double theta = theta0 + static_cast<double>(j + k) * dtheta;
      zr0[k] = std::cos(theta);
      zi0[k] = std::sin(theta);
    }
    float64x2_t zr = vld1q_f64(zr0);
    float64x2_t zi = vld1q_f64(zi0);
    const std::size_t block_end = std::min(n, j + kAnchor);
    for (; j + 2 <= block_end; j += 2) {
      float64x2_t acc_re = vld1q_f64(re.data() + j);
      acc_re = vfmaq_f64(acc_re, cr, zr);
      acc_re = vfmsq_f64(acc_re, ci, zi);
      vst1q_f64(re.data() + j, acc_re);
      if (want_im) {
        float64x2_t acc_im = vld1q_f64(im.data() + j);
        acc_im = vfmaq_f64(acc_im, cr, zi);
        acc_im = vfmaq_f64(acc_im, ci, zr);
        vst1q_f64(im.data() + j, acc_im);
      }
      const float64x2_t nr = vfmsq_f64(vmulq_f64(zr, wr), zi, wi);
      const float64x2_t ni = vfmaq_f64(vmulq_f64(zr, wi), zi, wr);
      zr = nr;
      zi = ni;
    }
  }
  for (; j < n; ++j) {
    const double theta = theta0 + static_cast<double>(j) * dtheta;
    re[j] += c.real() * std::cos(theta) - c.imag() * std::sin(theta);
    if (want_im) im[j] += c.real() * std::sin(theta) + c.imag() * std::cos(theta);
  }
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = y.size();
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    vst1q_f64(y.data() + j, vfmaq_f64(vld1q_f64(y.data() + j), va, vld1q_f64(x.data() + j)));
  }
  for (; j < n; ++j) y[j] += a * x[j];
}

}  // namespace radwig::simd::neon
