#include "radwig/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "radwig/error.hpp"
#include "radwig/parallel.hpp"
#include "radwig/quadrature.hpp"
#include "radwig/simd/kernels.hpp"
#include "radwig/special_fn.hpp"

namespace radwig {

namespace {

constexpr double kPi = std::numbers::pi;


// Trapezoid weights, or unit weight for a degenerate axis (the integral
// along a one-point axis is taken to be the sample itself).
std::vector<double> weights_or_unit(const Grid1D& g) {
  if (g.degenerate()) return {1.0};
  return trapezoid_weights(g);
}

// ln|g(ε)| and sign for g(ε) = exp(-e^{2γ}cosh 2ε) L_l(e^{2(γ+ε)}) L_l(e^{2(γ-ε)}).
struct LogValue {
  double log_abs;
  int sign;
};

LogValue closed_form_log_integrand(int l, double gamma, double eps) {
  const double x1 = std::exp(2.0 * (gamma + eps));
  const double x2 = std::exp(2.0 * (gamma - eps));
  const LaguerreEval a = laguerre_assoc(l, 0.0, x1);
  const LaguerreEval b = laguerre_assoc(l, 0.0, x2);
  return {-0.5 * (x1 + x2) + a.log_abs + b.log_abs, a.sign * b.sign};
}

double closed_form_integrand(int l, double gamma, double eps) {
  const LogValue lv = closed_form_log_integrand(l, gamma, eps);
  if (lv.sign == 0 || lv.log_abs < -745.0) return 0.0;
  return lv.sign * std::exp(lv.log_abs);
}

void check_gamma(double gamma, const WignerOptions& opts) {
  if (gamma < opts.gamma_floor) {
    std::ostringstream os;
    os << "gamma " << gamma << " is below the configured floor " << opts.gamma_floor;
    throw InputError(os.str());
  }
}

}  // namespace

double wigner_lower_bound() { return -1.0 / kPi; }

double overlap_convention_factor() { return 2.0 * kPi; }

WignerGrid::WignerGrid(Grid1D gamma_axis, Grid1D delta_axis)
    : gamma(gamma_axis), delta(delta_axis), values(gamma_axis.size() * delta_axis.size(), 0.0) {
  meta.overlap_factor = overlap_convention_factor();
}

double WignerGrid::integral() const {
  const auto wg = weights_or_unit(gamma);
  const auto wd = weights_or_unit(delta);
  double s = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < delta.size(); ++j) row += wd[j] * at(i, j);
    s += wg[i] * row;
  }
  return s;
}

double WignerGrid::min_value() const { return *std::min_element(values.begin(), values.end()); }
double WignerGrid::max_value() const { return *std::max_element(values.begin(), values.end()); }

// --- DensityMatrixV ---------------------------------------------------------

DensityMatrixV::DensityMatrixV(Grid1D grid, Eigen::MatrixXcd entries, TraceCheck check,
                               double herm_tol, double trace_tol)
    : grid_(grid), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw InputError("density matrix size does not match its grid");
  }
  const double herm = hermiticity_error();
  if (herm > herm_tol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herm;
    throw ValidationError(os.str());
  }
  const double tr = trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    std::ostringstream os;
    os << "density matrix trace " << tr << " differs from 1 by more than " << trace_tol;
    if (check == TraceCheck::Strict) throw ValidationError(os.str());
    warnings_.push_back(os.str());
  }
}

DensityMatrixV DensityMatrixV::pure(const WavefunctionV& psi, TraceCheck check) {
  const auto n = static_cast<Eigen::Index>(psi.values.size());
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = psi.values[static_cast<std::size_t>(i)];
  Eigen::MatrixXcd m = v * v.adjoint();
  return DensityMatrixV(psi.grid, std::move(m), check);
}

double DensityMatrixV::trace() const { return entries_.trace().real() * grid_.spacing(); }

double DensityMatrixV::hermiticity_error() const {
  double worst = 0.0;
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      worst = std::max(worst, std::abs(entries_(i, j) - std::conj(entries_(j, i))));
    }
  }
  return worst;
}

double DensityMatrixV::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_ * grid_.spacing(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// --- density route ------------------------------------------------------------

WignerGrid wigner_from_density(const DensityMatrixV& rho, const Grid1D& gamma,
                               const Grid1D& delta, const WignerOptions& opts) {
  const double herm = rho.hermiticity_error();
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herm;
    throw ValidationError(os.str());
  }
  const Grid1D& v = rho.grid();
  const std::size_t n = v.size();
  const double h = v.spacing();
  const auto& m = rho.entries();

  // Half-grid position p of each γ: γ = v_min + p·h/2.
  std::vector<long long> half_index(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const double pos = (gamma[i] - v.min()) / (0.5 * h);
    const double p = std::round(pos);
    if (std::abs(pos - p) > 1e-6 || p < 0 || p > 2.0 * static_cast<double>(n - 1)) {
      std::ostringstream os;
      os << "gamma " << gamma[i] << " is not on the half-spacing lattice of the v-bar grid ["
         << v.min() << ", " << v.max() << "] with spacing " << h;
      throw AlignmentError(os.str());
    }
    half_index[i] = static_cast<long long>(p);
  }

  WignerGrid out(gamma, delta);
  out.meta.route = "density";
  std::vector<double> row_max_imag(gamma.size(), 0.0);
  const double inv_2pi = 1.0 / (2.0 * kPi);
  const long long last = static_cast<long long>(n) - 1;

  parallel_for(gamma.size(), opts.threads, [&](std::size_t i) {
    const long long p = half_index[i];
    const long long reach = std::min(p, 2 * last - p);  // |d| <= reach, d ≡ p (mod 2)
    std::vector<double> re(delta.size(), 0.0), im(delta.size(), 0.0);
    for (long long d = -reach; d <= reach; d += 2) {
      const long long i1 = (p + d) / 2;
      const long long i2 = (p - d) / 2;
      const cdouble value = m(i1, i2);
      if (value == cdouble(0.0, 0.0)) continue;
      const double wt = (d == -reach || d == reach) && reach > 0 ? h : 2.0 * h;  // trapezoid, step 2h
      const double eps = static_cast<double>(d) * h;
      simd::phasor_accumulate(inv_2pi * wt * value, -eps * delta.min(), -eps * delta.spacing(),
                              re, im);
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < delta.size(); ++j) {
      out.at(i, j) = re[j];
      worst = std::max(worst, std::abs(im[j]));
    }
    row_max_imag[i] = worst;
  });

  out.meta.max_imag = *std::max_element(row_max_imag.begin(), row_max_imag.end());
  if (out.meta.max_imag > opts.max_imag_tol) {
    std::ostringstream os;
    os << "Wigner function has imaginary part " << out.meta.max_imag
       << " above tolerance " << opts.max_imag_tol;
    throw AccuracyError(os.str(), out.meta.max_imag);
  }
  return out;
}

// --- closed form ----------------------------------------------------------------

double closed_form_epsilon_max(int l, double gamma, double log_cutoff) {
  constexpr double kStep = 0.01;
  constexpr double kHardLimit = 60.0;
  const double e2g = std::exp(2.0 * gamma);
  const double largest_root_bound = 4.0 * l + 6.0;
  const double smallest_root_bound = l == 0 ? std::numeric_limits<double>::infinity()
                                            : 1.0 / (2.0 * l + 2.0);
  double peak = -std::numeric_limits<double>::infinity();
  for (double eps = 0.0; eps <= kHardLimit; eps += kStep) {
    const LogValue lv = closed_form_log_integrand(l, gamma, eps);
    const double lg = lv.sign == 0 ? -std::numeric_limits<double>::infinity() : lv.log_abs;
    peak = std::max(peak, lg);
    const double x1 = std::exp(2.0 * (gamma + eps));
    const double x2 = std::exp(2.0 * (gamma - eps));
    const bool monotone_tail = x1 > largest_root_bound && x2 < smallest_root_bound &&
                               2.0 * e2g * std::sinh(2.0 * eps) > 2.0 * l + 1.0;
    if (monotone_tail && lg < peak - log_cutoff) return eps;
  }
  throw AccuracyError("closed-form integrand does not decay within eps <= 60", kHardLimit);
}

double wigner_l0_closed(int l, double gamma, double delta, const WignerOptions& opts) {
  if (l < 0 || l > kDefaultMaxLaguerreDegree) throw DomainError("l must lie in [0, 64]");
  check_gamma(gamma, opts);
  const double eps_max = closed_form_epsilon_max(l, gamma, opts.log_cutoff);
  const double prefactor = 4.0 * std::exp(2.0 * gamma) / kPi;  // 2 × (2e^{2γ}/π), even integrand

  QuadratureOptions q;
  q.abs_tol = opts.abs_tol / prefactor;
  q.rel_tol = opts.rel_tol;
  q.max_initial_width = kPi / (10.0 * (1.0 + 2.0 * std::abs(delta)));
  q.max_intervals = opts.max_intervals;

  double odd_part = 0.0;
  auto integrand = [&](double eps) {
    const double gp = closed_form_integrand(l, gamma, eps);
    const double gm = closed_form_integrand(l, gamma, -eps);
    odd_part = std::max(odd_part, std::abs(gp - gm));
    return 0.5 * (gp + gm) * std::cos(2.0 * eps * delta);
  };
  const QuadratureResult r = integrate_gk21(integrand, 0.0, eps_max, q);
  // Sine-transform component is bounded by the odd part times the range.
  if (prefactor * odd_part * eps_max > 1e-10) {
    throw AccuracyError("closed-form integrand lost its even symmetry", odd_part);
  }
  return prefactor * r.value;
}

WignerGrid wigner_l0_closed_grid(int l, const Grid1D& gamma, const Grid1D& delta,
                                 const WignerOptions& opts) {
  if (l < 0 || l > kDefaultMaxLaguerreDegree) throw DomainError("l must lie in [0, 64]");
  for (std::size_t i = 0; i < gamma.size(); ++i) check_gamma(gamma[i], opts);

  WignerGrid out(gamma, delta);
  out.meta.route = "closed-form";
  out.meta.l = l;
  const double delta_abs_max = std::max(std::abs(delta.min()), std::abs(delta.max()));
  std::vector<double> row_error(gamma.size(), 0.0);
  std::vector<double> row_odd(gamma.size(), 0.0);

  parallel_for(gamma.size(), opts.threads, [&](std::size_t i) {
    const double g = gamma[i];
    const double eps_max = closed_form_epsilon_max(l, g, opts.log_cutoff);
    const double prefactor = 4.0 * std::exp(2.0 * g) / kPi;
    QuadratureOptions q;
    q.abs_tol = opts.abs_tol / prefactor;
    q.rel_tol = opts.rel_tol;
    q.max_initial_width = kPi / (10.0 * (1.0 + 2.0 * delta_abs_max));
    q.max_intervals = opts.max_intervals;

    double odd = 0.0;
    const double d0 = delta.min();
    const double dd = delta.spacing();
    auto sink = [&](double eps, double wk, double wg, std::span<double> kron,
                    std::span<double> gauss) {
      const double gp = closed_form_integrand(l, g, eps);
      const double gm = closed_form_integrand(l, g, -eps);
      odd = std::max(odd, std::abs(gp - gm));
      const double even = 0.5 * (gp + gm);
      if (even == 0.0) return;
      // cos(2εδ_j) = Re e^{i·2ε(δ_0 + jΔδ)}
      simd::phasor_accumulate(wk * even, 2.0 * eps * d0, 2.0 * eps * dd, kron, {});
      if (wg != 0.0) simd::phasor_accumulate(wg * even, 2.0 * eps * d0, 2.0 * eps * dd, gauss, {});
    };
    const VectorQuadratureResult r = integrate_gk21_vector(sink, delta.size(), 0.0, eps_max, q);
    for (std::size_t j = 0; j < delta.size(); ++j) out.at(i, j) = prefactor * r.value[j];
    row_error[i] = prefactor * r.error;
    row_odd[i] = prefactor * odd * eps_max;
  });

  out.meta.diagnostics["quadrature_error_max"] =
      *std::max_element(row_error.begin(), row_error.end());
  out.meta.diagnostics["sine_component_bound"] = *std::max_element(row_odd.begin(), row_odd.end());
  if (out.meta.diagnostics["sine_component_bound"] > 1e-10) {
    throw AccuracyError("closed-form integrand lost its even symmetry",
                        out.meta.diagnostics["sine_component_bound"]);
  }
  return out;
}

// --- marginals, overlap, smoothing ------------------------------------------------

namespace {

void report_edge(Marginal& m, double max_edge_mass, const char* axis_name, double edge_peak) {
  if (edge_peak > 1e-9) {
    std::ostringstream os;
    os << "|W| reaches " << edge_peak << " on the " << axis_name << " edges (want < 1e-9)";
    m.warnings.push_back(os.str());
  }
  if (m.edge_mass > max_edge_mass) {
    std::ostringstream os;
    os << "Wigner grid truncated along " << axis_name << ": edge mass " << m.edge_mass
       << " exceeds " << max_edge_mass;
    throw TruncationError(os.str(), m.edge_mass);
  }
}

}  // namespace

Marginal marginal_position(const WignerGrid& w, double max_edge_mass) {
  Marginal m{w.gamma, std::vector<double>(w.gamma.size(), 0.0), 0.0, {}};
  const auto wd = weights_or_unit(w.delta);
  const auto wg = weights_or_unit(w.gamma);
  const std::size_t last = w.delta.size() - 1;
  double edge_peak = 0.0;
  for (std::size_t i = 0; i < w.gamma.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < w.delta.size(); ++j) s += wd[j] * w.at(i, j);
    m.density[i] = s;
    const double e = std::abs(w.at(i, 0)) + std::abs(w.at(i, last));
    m.edge_mass += wg[i] * e;
    edge_peak = std::max({edge_peak, std::abs(w.at(i, 0)), std::abs(w.at(i, last))});
  }
  report_edge(m, max_edge_mass, "delta", edge_peak);
  return m;
}

Marginal marginal_momentum(const WignerGrid& w, double max_edge_mass) {
  Marginal m{w.delta, std::vector<double>(w.delta.size(), 0.0), 0.0, {}};
  const auto wd = weights_or_unit(w.delta);
  const auto wg = weights_or_unit(w.gamma);
  const std::size_t last = w.gamma.size() - 1;
  double edge_peak = 0.0;
  for (std::size_t i = 0; i < w.gamma.size(); ++i) {
    simd::axpy(wg[i], std::span<const double>(&w.values[i * w.delta.size()], w.delta.size()),
               m.density);
  }
  for (std::size_t j = 0; j < w.delta.size(); ++j) {
    const double e = std::abs(w.at(0, j)) + std::abs(w.at(last, j));
    m.edge_mass += wd[j] * e;
    edge_peak = std::max({edge_peak, std::abs(w.at(0, j)), std::abs(w.at(last, j))});
  }
  report_edge(m, max_edge_mass, "gamma", edge_peak);
  return m;
}

double overlap(const WignerGrid& w1, const WignerGrid& w2) {
  if (!(w1.gamma == w2.gamma) || !(w1.delta == w2.delta)) {
    throw AlignmentError("overlap needs identical Wigner grids");
  }
  const auto wg = weights_or_unit(w1.gamma);
  const auto wd = weights_or_unit(w1.delta);
  double s = 0.0;
  for (std::size_t i = 0; i < w1.gamma.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < w1.delta.size(); ++j) row += wd[j] * w1.at(i, j) * w2.at(i, j);
    s += wg[i] * row;
  }
  return overlap_convention_factor() * s;
}

namespace {

// Discrete Gaussian of the given variance on spacing h, unit sum.
std::vector<double> gaussian_kernel(double variance, double h, std::ptrdiff_t& half) {
  const double sigma = std::sqrt(variance);
  half = static_cast<std::ptrdiff_t>(std::ceil(10.0 * sigma / h));
  std::vector<double> k(static_cast<std::size_t>(2 * half + 1));
  double sum = 0.0;
  for (std::ptrdiff_t m = -half; m <= half; ++m) {
    const double x = static_cast<double>(m) * h;
    const double v = std::exp(-0.5 * x * x / variance);
    k[static_cast<std::size_t>(m + half)] = v;
    sum += v;
  }
  for (double& v : k) v /= sum;
  return k;
}

}  // namespace

WignerGrid s_smooth(const WignerGrid& w, double s) {
  if (s > 0.0) throw UnsupportedOrderError("s-ordered smoothing is only defined for s <= 0");
  WignerGrid out = w;
  out.meta.s = s;
  if (s == 0.0) return out;
  out.meta.route = w.meta.route + "+smoothed";
  const double variance = -s / 2.0;
  const std::size_t ng = w.gamma.size();
  const std::size_t nd = w.delta.size();

  // along δ (contiguous rows)
  if (!w.delta.degenerate()) {
    std::ptrdiff_t half = 0;
    const auto k = gaussian_kernel(variance, w.delta.spacing(), half);
    std::fill(out.values.begin(), out.values.end(), 0.0);
    for (std::size_t i = 0; i < ng; ++i) {
      const std::span<const double> src(&w.values[i * nd], nd);
      const std::span<double> dst(&out.values[i * nd], nd);
      for (std::ptrdiff_t m = -half; m <= half; ++m) {
        // dst[j] += k_m src[j - m]
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, m);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(nd),
                                                           static_cast<std::ptrdiff_t>(nd) + m);
        if (hi <= lo) continue;
        simd::axpy(k[static_cast<std::size_t>(m + half)],
                   src.subspan(static_cast<std::size_t>(lo - m), static_cast<std::size_t>(hi - lo)),
                   dst.subspan(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo)));
      }
    }
  }
  // along γ (row axpy)
  if (!w.gamma.degenerate()) {
    std::ptrdiff_t half = 0;
    const auto k = gaussian_kernel(variance, w.gamma.spacing(), half);
    const std::vector<double> src = out.values;
    std::fill(out.values.begin(), out.values.end(), 0.0);
    for (std::size_t i = 0; i < ng; ++i) {
      const std::span<double> dst(&out.values[i * nd], nd);
      for (std::ptrdiff_t m = -half; m <= half; ++m) {
        const std::ptrdiff_t from = static_cast<std::ptrdiff_t>(i) - m;
        if (from < 0 || from >= static_cast<std::ptrdiff_t>(ng)) continue;
        simd::axpy(k[static_cast<std::size_t>(m + half)],
                   std::span<const double>(&src[static_cast<std::size_t>(from) * nd], nd), dst);
      }
    }
  }
  return out;
}

}  // namespace radwig
