#include <cmath>

#include "radwig/simd/kernels.hpp"

namespace radwig::simd::scalar {

// Reference: every phase is evaluated directly, no recurrence.
void phasor_accumulate(std::complex<double> c, double theta0, double dtheta,
                       std::span<double> re, std::span<double> im) {
  const double cr = c.real();
  const double ci = c.imag();
  const std::size_t n = re.size();
  const bool want_im = !im.empty();
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = theta0 + static_cast<double>(j) * dtheta;
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    re[j] += cr * cs - ci * sn;
    if (want_im) im[j] += cr * sn + ci * cs;
  }
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = y.size();
  for (std::size_t j = 0; j < n; ++j) y[j] += a * x[j];
}

}  // namespace radwig::simd::scalar
