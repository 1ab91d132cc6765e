#include "radwig/operators.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"
#include "radwig/error.hpp"
#include "radwig/simd/kernels.hpp"

namespace radwig {

namespace {

constexpr cdouble kI(0.0, 1.0);

// Fornberg weights for the first derivative at x0 from nodes x[0..n).
std::vector<double> first_derivative_weights(double x0, std::span<const double> x) {
  const std::size_t n = x.size();
  // c[j][k]: weight of node j for derivative order k (k = 0, 1)
  std::vector<std::array<double, 2>> c(n, {0.0, 0.0});
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = c[j][1];
  return w;
}

// 5-point (4th order) derivative of complex samples on arbitrary nodes.
std::vector<cdouble> derivative_fd(std::span<const double> x, std::span<const cdouble> f) {
  const std::size_t n = x.size();
  if (n < 5) throw InputError("finite-difference derivative needs at least 5 samples");
  std::vector<cdouble> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = i < 2 ? 0 : i - 2;
    if (start + 5 > n) start = n - 5;
    const auto w = first_derivative_weights(x[i], x.subspan(start, 5));
    cdouble s = 0.0;
    for (std::size_t j = 0; j < 5; ++j) s += w[j] * f[start + j];
    out[i] = s;
  }
  return out;
}

void warn_if_not_decayed(const WavefunctionV& psi, std::vector<std::string>& warnings,
                         const char* what) {
  if (psi.values.empty()) return;
  const double edge = std::max(std::abs(psi.values.front()), std::abs(psi.values.back()));
  if (edge > kEdgeDecay) {
    std::ostringstream os;
    os << what << ": edge amplitude " << edge
       << " exceeds 1e-10, periodic wraparound contaminates the result";
    warnings.push_back(os.str());
  }
}

// Multiplies the spectrum of psi by multiplier(k) (Nyquist bin handled by
// `nyquist`, which receives k_N).
template <typename Multiplier, typename Nyquist>
std::vector<cdouble> spectral_apply(const WavefunctionV& psi, Multiplier multiplier,
                                    Nyquist nyquist) {
  const std::size_t n = psi.values.size();
  std::vector<cdouble> buf = psi.values;
  detail::fft_inplace(buf, detail::FftDirection::Forward);
  const auto k = detail::fft_wavenumbers(n, psi.grid.spacing());
  for (std::size_t j = 0; j < n; ++j) {
    const bool is_nyquist = (n % 2 == 0) && j == n / 2;
    buf[j] *= is_nyquist ? nyquist(k[j]) : multiplier(k[j]);
  }
  detail::fft_inplace(buf, detail::FftDirection::Backward);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& x : buf) x *= scale;
  return buf;
}

void require_same_grid(const Grid1D& a, const Grid1D& b) {
  if (!(a == b)) throw AlignmentError("wavefunctions live on different grids");
}

}  // namespace

WavefunctionR apply_pd(const WavefunctionR& psi) {
  const auto d = derivative_fd(psi.r, psi.values);
  WavefunctionR out = psi;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.values[i] = -kI * (d[i] + psi.values[i] / (2.0 * psi.r[i]));
  }
  return out;
}

WavefunctionR apply_pr(const WavefunctionR& psi) {
  const auto d = derivative_fd(psi.r, psi.values);
  WavefunctionR out = psi;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.values[i] = -kI * (psi.r[i] * d[i] + psi.values[i]);
  }
  return out;
}

WavefunctionR apply_r(const WavefunctionR& psi) {
  WavefunctionR out = psi;
  for (std::size_t i = 0; i < psi.r.size(); ++i) out.values[i] *= psi.r[i];
  return out;
}

WavefunctionV apply_pr(const WavefunctionV& psi, Representation rep) {
  WavefunctionV out{psi.grid, {}, psi.warnings};
  if (rep == Representation::FiniteDifference) {
    const auto x = psi.grid.values();
    auto d = derivative_fd(x, psi.values);
    for (auto& v : d) v *= -kI;
    out.values = std::move(d);
    return out;
  }
  warn_if_not_decayed(psi, out.warnings, "apply_pr");
  // -i ∂ -> multiply by k
  out.values = spectral_apply(psi, [](double k) { return cdouble(k, 0.0); },
                              [](double) { return cdouble(0.0, 0.0); });
  return out;
}

WavefunctionV apply_v(const WavefunctionV& psi) {
  WavefunctionV out = psi;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= psi.grid[i];
  return out;
}

WavefunctionV apply_r(const WavefunctionV& psi) {
  WavefunctionV out = psi;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= std::exp(psi.grid[i]);
  return out;
}

WavefunctionV apply_annihilation(const WavefunctionV& psi) {
  const WavefunctionV vpsi = apply_v(psi);
  const WavefunctionV ppsi = apply_pr(psi);
  WavefunctionV out{psi.grid, std::vector<cdouble>(psi.values.size()), ppsi.warnings};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = (vpsi.values[i] + kI * ppsi.values[i]) / std::numbers::sqrt2;
  }
  return out;
}

WavefunctionV translate(const WavefunctionV& psi, double shift) {
  WavefunctionV out{psi.grid, {}, psi.warnings};
  if (shift == 0.0) {
    out.values = psi.values;
    return out;
  }
  warn_if_not_decayed(psi, out.warnings, "translate");
  out.values = spectral_apply(psi, [shift](double k) { return std::polar(1.0, k * shift); },
                              [shift](double k) { return cdouble(std::cos(k * shift), 0.0); });
  return out;
}

double translation_lost_mass(const WavefunctionV& psi, double shift) {
  if (shift == 0.0 || psi.grid.degenerate()) return 0.0;
  const auto w = trapezoid_weights(psi.grid);
  double lost = 0.0;
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    const double v = psi.grid[i];
    const bool exits = shift > 0.0 ? (v < psi.grid.min() + shift) : (v > psi.grid.max() + shift);
    if (exits) lost += w[i] * std::norm(psi.values[i]);
  }
  return lost;
}

WavefunctionV apply_displacement(double lambda, double mu, const WavefunctionV& psi,
                                 double max_lost_mass) {
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    throw DomainError("displacement parameters must be finite");
  }
  const double lost = translation_lost_mass(psi, mu);
  if (lost > max_lost_mass) {
    std::ostringstream os;
    os << "displacement by mu=" << mu << " moves mass " << lost << " outside the grid";
    throw TruncationError(os.str(), lost);
  }
  WavefunctionV half = translate(psi, 0.5 * mu);
  for (std::size_t i = 0; i < half.values.size(); ++i) {
    half.values[i] *= std::polar(1.0, lambda * psi.grid[i]);
  }
  return translate(half, 0.5 * mu);
}

WavefunctionV apply_displacement_adjoint(double lambda, double mu, const WavefunctionV& psi,
                                         double max_lost_mass) {
  return apply_displacement(-lambda, -mu, psi, max_lost_mass);
}

WavefunctionV momentum_transform(const WavefunctionV& psi, const Grid1D& p_grid) {
  WavefunctionV out{p_grid, std::vector<cdouble>(p_grid.size()), psi.warnings};
  const double edge = psi.values.empty()
                          ? 0.0
                          : std::max(std::abs(psi.values.front()), std::abs(psi.values.back()));
  if (edge > kEdgeDecay) {
    std::ostringstream os;
    os << "momentum_transform: edge amplitude " << edge << " exceeds 1e-10";
    out.warnings.push_back(os.str());
  }
  std::vector<double> re(p_grid.size(), 0.0), im(p_grid.size(), 0.0);
  const auto w = trapezoid_weights(psi.grid);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < psi.values.size(); ++k) {
    if (psi.values[k] == cdouble(0.0, 0.0)) continue;
    const double v = psi.grid[k];
    // e^{-i P v}: θ_j = -v (P_0 + j ΔP)
    simd::phasor_accumulate(norm * w[k] * psi.values[k], -v * p_grid.min(),
                            -v * p_grid.spacing(), re, im);
  }
  for (std::size_t j = 0; j < p_grid.size(); ++j) out.values[j] = cdouble(re[j], im[j]);
  return out;
}

cdouble inner_product(const WavefunctionV& a, const WavefunctionV& b) {
  require_same_grid(a.grid, b.grid);
  const auto w = trapezoid_weights(a.grid);
  cdouble s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += w[i] * std::conj(a.values[i]) * b.values[i];
  return s;
}

cdouble inner_product(const WavefunctionR& a, const WavefunctionR& b) {
  if (a.r != b.r) throw AlignmentError("wavefunctions live on different radial grids");
  cdouble s = 0.0;
  for (std::size_t i = 0; i + 1 < a.r.size(); ++i) {
    const cdouble f0 = a.r[i] * std::conj(a.values[i]) * b.values[i];
    const cdouble f1 = a.r[i + 1] * std::conj(a.values[i + 1]) * b.values[i + 1];
    s += 0.5 * (a.r[i + 1] - a.r[i]) * (f0 + f1);
  }
  return s;
}

namespace {

void check_hermitian_expectation(cdouble value, double tol, const char* what) {
  if (std::abs(value.imag()) > tol * std::max(1.0, std::abs(value.real()))) {
    std::ostringstream os;
    os << "expectation of Hermitian operator " << what << " has imaginary part "
       << value.imag();
    throw ValidationError(os.str());
  }
}

}  // namespace

cdouble expectation(const OperatorAction& op, const WavefunctionV& psi, double hermitian_tol) {
  cdouble value;
  switch (op.kind) {
    case OperatorKind::PD:
      throw BasisMismatchError("P^D acts on r-basis wavefunctions only");
    case OperatorKind::Pr:
      value = inner_product(psi, apply_pr(psi, op.representation));
      check_hermitian_expectation(value, hermitian_tol, "P^r");
      return value;
    case OperatorKind::V:
      value = inner_product(psi, apply_v(psi));
      check_hermitian_expectation(value, hermitian_tol, "v");
      return value;
    case OperatorKind::R:
      value = inner_product(psi, apply_r(psi));
      check_hermitian_expectation(value, hermitian_tol, "r");
      return value;
    case OperatorKind::Displacement:
      return inner_product(psi, apply_displacement(op.lambda, op.mu, psi));
  }
  return value;
}

cdouble expectation(const OperatorAction& op, const WavefunctionR& psi, double hermitian_tol) {
  cdouble value;
  switch (op.kind) {
    case OperatorKind::PD:
      return inner_product(psi, apply_pd(psi));
    case OperatorKind::Pr:
      value = inner_product(psi, apply_pr(psi));
      check_hermitian_expectation(value, hermitian_tol, "P^r");
      return value;
    case OperatorKind::V: {
      WavefunctionR lnr = psi;
      for (std::size_t i = 0; i < psi.r.size(); ++i) lnr.values[i] *= std::log(psi.r[i]);
      value = inner_product(psi, lnr);
      check_hermitian_expectation(value, hermitian_tol, "v");
      return value;
    }
    case OperatorKind::R:
      value = inner_product(psi, apply_r(psi));
      check_hermitian_expectation(value, hermitian_tol, "r");
      return value;
    case OperatorKind::Displacement:
      throw BasisMismatchError("D(lambda, mu) is applied in the v-bar basis");
  }
  return value;
}

double displacement_trace_weight(double lambda, double mu, double packet_width) {
  if (!(packet_width > 0.0)) throw DomainError("packet width must be positive");
  const double sigma = packet_width;
  // v̄ grid: resolves the packet and momenta up to |λ| + 8/σ, and holds
  // every shifted copy.
  const double span = 3.0 + 2.0 * std::abs(mu) + 10.0 * sigma;
  const double p_max = std::abs(lambda) + 8.0 / sigma;
  const double h = std::min(sigma / 10.0, std::numbers::pi / (2.0 * p_max));
  const std::size_t n = static_cast<std::size_t>(std::ceil(2.0 * span / h)) + 1;
  const Grid1D grid(-span, span, n);

  WavefunctionV packet{grid, std::vector<cdouble>(n), {}};
  const double amp = std::pow(std::numbers::pi * sigma * sigma, -0.25);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = grid[i];
    packet.values[i] = amp * std::exp(-0.5 * v * v / (sigma * sigma));
  }

  // Kernel widths: σ√2 along μ', √2/σ along λ'; integrate ±7 widths.
  const double mu_half = 7.0 * std::numbers::sqrt2 * sigma;
  const double la_half = 7.0 * std::numbers::sqrt2 / sigma;
  const Grid1D mu_axis(mu - mu_half, mu + mu_half, 57);
  const Grid1D la_axis(lambda - la_half, lambda + la_half, 57);
  const auto w_mu = trapezoid_weights(mu_axis);
  const auto w_la = trapezoid_weights(la_axis);

  double total = 0.0;
  for (std::size_t a = 0; a < mu_axis.size(); ++a) {
    for (std::size_t b = 0; b < la_axis.size(); ++b) {
      const WavefunctionV right = apply_displacement_adjoint(la_axis[b], mu_axis[a], packet, 1e-6);
      const WavefunctionV both = apply_displacement(lambda, mu, right, 1e-6);
      total += w_mu[a] * w_la[b] * std::norm(inner_product(packet, both));
    }
  }
  return total / (2.0 * std::numbers::pi);
}

}  // namespace radwig
