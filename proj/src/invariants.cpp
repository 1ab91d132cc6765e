#include "radwig/invariants.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <random>

#include "radwig/error.hpp"
#include "radwig/fock.hpp"
#include "radwig/operators.hpp"
#include "radwig/quadrature.hpp"
#include "radwig/simd/kernels.hpp"
#include "radwig/special_fn.hpp"
#include "radwig/states.hpp"
#include "radwig/wigner.hpp"

namespace radwig {

namespace {

constexpr double kPi = std::numbers::pi;

double l2_norm(const WavefunctionV& psi) { return std::sqrt(psi.norm_squared()); }

WavefunctionV combine(const WavefunctionV& a, cdouble ca, const WavefunctionV& b, cdouble cb) {
  WavefunctionV out{a.grid, std::vector<cdouble>(a.values.size()), {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = ca * a.values[i] + cb * b.values[i];
  return out;
}

// Shared, lazily built inputs for the Wigner invariants.
class Context {
 public:
  explicit Context(int threads) { opts_.threads = threads; }

  const WignerOptions& opts() const { return opts_; }

  Grid1D wide_vbar() const { return Grid1D(-16.0, 6.0, 2201); }
  Grid1D wide_gamma() const { return Grid1D(-15.0, 6.0, 1051); }
  Grid1D wide_delta() const { return Grid1D(-28.0, 28.0, 561); }
  Grid1D momentum_vbar() const { return Grid1D(-30.0, 5.0, 3501); }

  const std::vector<WignerGrid>& wide() {
    if (wide_.empty()) {
      for (int l = 0; l <= 3; ++l) {
        const auto rho = DensityMatrixV::pure(schwinger_state_l0(l, wide_vbar()));
        wide_.push_back(wigner_from_density(rho, wide_gamma(), wide_delta(), opts_));
      }
    }
    return wide_;
  }

  /// Test states with edge-decayed samples: vacuum, two coherent states, l = 0..3.
  const std::vector<WavefunctionV>& suite() {
    if (suite_.empty()) {
      const Grid1D g(-12.0, 12.0, 2401);
      suite_.push_back(dilaton_vacuum_state(g));
      suite_.push_back(dilaton_coherent({0.5, 0.4}, g));
      suite_.push_back(dilaton_coherent({-0.7, -0.3}, g));
      for (int l = 0; l <= 3; ++l) suite_.push_back(schwinger_state_l0(l, momentum_vbar()));
    }
    return suite_;
  }

 private:
  WignerOptions opts_;
  std::vector<WignerGrid> wide_;
  std::vector<WavefunctionV> suite_;
};

struct Invariant {
  const char* name;
  double tolerance;
  std::function<double(Context&)> measure;
};

// --- special functions -----------------------------------------------------------

double laguerre_recurrence(Context&) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(1, 19);
  std::uniform_real_distribution<double> xs(0.0, 50.0);
  const double alphas[] = {0.0, 1.0, 2.0, 5.0};
  double worst = 0.0;
  for (int t = 0; t < 400; ++t) {
    const int n = deg(rng);
    const double x = xs(rng);
    const double a = alphas[t % 4];
    const double lm = laguerre_assoc(n - 1, a, x).value;
    const double l0 = laguerre_assoc(n, a, x).value;
    const double lp = laguerre_assoc(n + 1, a, x).value;
    const double t1 = (n + 1) * lp, t2 = (2 * n + 1 + a - x) * l0, t3 = (n + a) * lm;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale > 0) worst = std::max(worst, std::abs(t1 - t2 + t3) / scale);
  }
  return worst;
}

double laguerre_derivative(Context&) {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (double a : {0.0, 1.0, 2.0}) {
      double err = 0.0, size = 0.0;
      for (double x = 0.1; x <= 20.0; x += 0.37) {
        const double h = 1e-3;
        auto f = [&](double y) { return laguerre_assoc(n, a, y).value; };
        const double fd = (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
        const double exact = -laguerre_assoc(n - 1, a + 1, x).value;
        err = std::max(err, std::abs(fd - exact));
        size = std::max(size, std::abs(exact));
      }
      worst = std::max(worst, err / size);
    }
  }
  return worst;
}

double laguerre_orthogonality(Context&) {
  double worst = 0.0;
  for (double a : {0.0, 2.0}) {
    for (int n = 0; n <= 5; ++n) {
      for (int m = 0; m <= n; ++m) {
        auto f = [&](double x) {
          if (x == 0.0) return a == 0.0 ? laguerre_assoc(n, a, 0).value * laguerre_assoc(m, a, 0).value : 0.0;
          return std::exp(a * std::log(x) - x) * laguerre_assoc(n, a, x).value * laguerre_assoc(m, a, x).value;
        };
        QuadratureOptions q;
        q.abs_tol = 1e-13;
        q.rel_tol = 1e-12;
        const double v = integrate_gk21(f, 0.0, 40.0, q).value + integrate_gk21(f, 40.0, 200.0, q).value;
        const double norm = std::exp(std::lgamma(n + a + 1) - log_factorial(n));
        const double want = n == m ? norm : 0.0;
        worst = std::max(worst, std::abs(v - want) / norm);
      }
    }
  }
  return worst;
}

// --- states ----------------------------------------------------------------------------

double schwinger_orthonormality(Context&) {
  const Grid1D g = default_vbar_grid();
  std::vector<WavefunctionV> s;
  for (int l = 0; l <= 5; ++l) s.push_back(schwinger_state_l0(l, g));
  double worst = 0.0;
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      const double want = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner_product(s[a], s[b]) - want));
    }
  }
  return worst;
}

double radial_norm(const SchwingerLabel& label) {
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double v = radial_wavefunction(label, r);
    return r * v * v;
  };
  QuadratureOptions q;
  q.abs_tol = 1e-14;
  q.rel_tol = 1e-13;
  return integrate_gk21(f, 0.0, 5.0, q).value + integrate_gk21(f, 5.0, 30.0, q).value;
}

double to_vbar_norm_grid(Context&) {
  const SchwingerLabel label = SchwingerLabel::from_occupations(3, 1);
  const WavefunctionR psi = sample_radial(label, log_spaced_radii(1e-5, 40.0, 4000));
  const WavefunctionV v = to_vbar(psi, Grid1D(-11.0, 3.6, 2921));
  return std::abs(psi.norm_squared() - v.norm_squared());
}

double to_vbar_norm_closed(Context&) {
  const SchwingerLabel label = SchwingerLabel::from_occupations(3, 1);
  const WavefunctionV v = to_vbar(
      [&](double r) { return cdouble(radial_wavefunction(label, r), 0.0); }, default_vbar_grid());
  return std::abs(radial_norm(label) - v.norm_squared());
}

double vacuum_norm_r(Context&) {
  auto f = [](double r) {
    if (r <= 0.0) return 0.0;
    const double v = std::abs(dilaton_vacuum(Basis::R, r));
    return r * v * v;
  };
  QuadratureOptions q;
  q.abs_tol = 1e-14;
  q.rel_tol = 1e-13;
  double total = 0.0;
  const double cuts[] = {0.0, std::exp(-9.0), std::exp(-3.0), 1.0, std::exp(3.0), std::exp(9.0)};
  for (int k = 0; k + 1 < 6; ++k) total += integrate_gk21(f, cuts[k], cuts[k + 1], q).value;
  return std::abs(total - 1.0);
}

double vacuum_annihilation(Context&) {
  return l2_norm(apply_annihilation(dilaton_vacuum_state(Grid1D(-12.0, 12.0, 2401))));
}

// --- operators ----------------------------------------------------------------------------

double weyl_commutator(Context& ctx) {
  double worst = 0.0;
  for (const auto& psi : ctx.suite()) {
    const WavefunctionV vp = apply_v(apply_pr(psi));
    const WavefunctionV pv = apply_pr(apply_v(psi));
    WavefunctionV res = combine(vp, 1.0, pv, -1.0);
    for (std::size_t i = 0; i < res.values.size(); ++i) res.values[i] -= cdouble(0, 1) * psi.values[i];
    worst = std::max(worst, l2_norm(res));
  }
  return worst;
}

double sack_commutator(Context&) {
  double worst = 0.0;
  const auto radii = log_spaced_radii(1e-4, 12.0, 6000);
  for (auto [np, nm] : {std::pair{0, 0}, {1, 1}, {2, 0}, {3, 1}}) {
    const WavefunctionR psi = sample_radial(SchwingerLabel::from_occupations(np, nm), radii);
    const WavefunctionR rp = apply_r(apply_pr(psi));
    const WavefunctionR pr = apply_pr(apply_r(psi));
    WavefunctionR res = rp;
    for (std::size_t i = 0; i < res.values.size(); ++i) {
      res.values[i] = rp.values[i] - pr.values[i] - cdouble(0, 1) * radii[i] * psi.values[i];
    }
    worst = std::max(worst, std::sqrt(res.norm_squared()));
  }
  return worst;
}

double dilation_scaling(Context& ctx) {
  const WavefunctionV& psi = ctx.suite().front();
  const OperatorAction r{OperatorKind::R};
  const double base = expectation(r, psi).real();
  double worst = 0.0;
  for (double s = -1.0; s <= 1.0001; s += 0.25) {
    const double moved = expectation(r, translate(psi, s)).real();
    worst = std::max(worst, std::abs(moved - std::exp(-s) * base) / (std::exp(-s) * base));
  }
  return worst;
}

double displacement_composition(Context& ctx) {
  const WavefunctionV& psi = ctx.suite()[1];
  double worst = 0.0;
  for (auto [m1, m2] : {std::pair{0.3, -0.8}, {1.1, 0.4}, {-0.6, -0.5}}) {
    const WavefunctionV two = apply_displacement(0.0, m1, apply_displacement(0.0, m2, psi));
    const WavefunctionV one = apply_displacement(0.0, m1 + m2, psi);
    // align the global phase before comparing
    const cdouble ov = inner_product(one, two);
    const cdouble phase = std::abs(ov) > 0 ? ov / std::abs(ov) : cdouble(1.0);
    worst = std::max(worst, l2_norm(combine(two, 1.0, one, -phase)));
  }
  return worst;
}

double pr_self_adjoint(Context& ctx) {
  const auto& s = ctx.suite();
  double worst = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a; b < s.size(); ++b) {
      if (!(s[a].grid == s[b].grid)) continue;
      const cdouble lhs = inner_product(s[a], apply_pr(s[b]));
      const cdouble rhs = inner_product(apply_pr(s[a]), s[b]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double displacement_adjoint_r(Context& ctx) {
  const OperatorAction r{OperatorKind::R};
  double worst = 0.0;
  for (std::size_t k : {std::size_t{0}, std::size_t{1}}) {
    const WavefunctionV& psi = ctx.suite()[k];
    const double base = expectation(r, psi).real();
    for (double lam = -1.0; lam <= 1.0001; lam += 0.5) {
      for (double mu = -1.0; mu <= 1.0001; mu += 0.5) {
        const double moved = expectation(r, apply_displacement(lam, mu, psi)).real();
        const double want = std::exp(-mu) * base;
        worst = std::max(worst, std::abs(moved - want) / std::abs(want));
      }
    }
  }
  return worst;
}

double displacement_adjoint_pr(Context& ctx) {
  const OperatorAction p{OperatorKind::Pr};
  double worst = 0.0;
  for (std::size_t k : {std::size_t{0}, std::size_t{1}}) {
    const WavefunctionV& psi = ctx.suite()[k];
    const double base = expectation(p, psi).real();
    for (double lam = -1.0; lam <= 1.0001; lam += 0.5) {
      for (double mu = -1.0; mu <= 1.0001; mu += 0.5) {
        const double moved = expectation(p, apply_displacement(lam, mu, psi)).real();
        const double want = base + lam;
        worst = std::max(worst, std::abs(moved - want) / std::max(1.0, std::abs(want)));
      }
    }
  }
  return worst;
}

double displacement_trace_smeared(Context&) {
  double worst = 0.0;
  for (double mu : {-0.5, 0.0, 0.5}) {
    worst = std::max(worst, std::abs(displacement_trace_weight(0.3, mu, 0.05) - 1.0));
  }
  return worst;
}

// --- Wigner ----------------------------------------------------------------------------------

double wigner_cross_route(Context& ctx) {
  const Grid1D g(-3.0, 2.0, 51), d(-4.0, 4.0, 65);
  double worst = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const auto rho = DensityMatrixV::pure(schwinger_state_l0(l, default_vbar_grid()));
    const WignerGrid a = wigner_from_density(rho, g, d, ctx.opts());
    const WignerGrid b = wigner_l0_closed_grid(l, g, d, ctx.opts());
    for (std::size_t k = 0; k < a.values.size(); ++k) worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  }
  return worst;
}

double wigner_vacuum(Context& ctx) {
  const Grid1D v(-10.0, 10.0, 2001);
  const Grid1D g(-4.0, 4.0, 81), d(-4.0, 4.0, 81);
  const WignerGrid w = wigner_from_density(DensityMatrixV::pure(dilaton_vacuum_state(v)), g, d, ctx.opts());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      worst = std::max(worst, std::abs(w.at(i, j) - std::exp(-g[i] * g[i] - d[j] * d[j]) / kPi));
    }
  }
  return worst;
}

double wigner_normalization(Context& ctx) {
  double worst = 0.0;
  for (const auto& w : ctx.wide()) worst = std::max(worst, std::abs(w.integral() - 1.0));
  return worst;
}

double wigner_reality(Context& ctx) {
  double worst = 0.0;
  for (const auto& w : ctx.wide()) worst = std::max(worst, w.meta.max_imag);
  return worst;
}

double wigner_bound(Context& ctx) {
  double worst = 0.0;
  for (const auto& w : ctx.wide()) worst = std::max(worst, wigner_lower_bound() - w.min_value());
  return std::max(worst, 0.0);
}

double wigner_negativity(Context& ctx) {
  double least_negative = -std::numeric_limits<double>::infinity();
  for (int l = 1; l <= 3; ++l) least_negative = std::max(least_negative, ctx.wide()[l].min_value());
  return least_negative;
}

double marginal_position_check(Context& ctx) {
  double worst = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const Marginal m = marginal_position(ctx.wide()[l]);
    for (std::size_t i = 0; i < m.density.size(); ++i) {
      const double x = std::exp(2.0 * m.axis[i]);
      const double lv = laguerre_assoc(l, 0.0, x).value;
      worst = std::max(worst, std::abs(m.density[i] - 2.0 * x * std::exp(-x) * lv * lv));
    }
  }
  return worst;
}

double marginal_momentum_check(Context& ctx) {
  double worst = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const Marginal m = marginal_momentum(ctx.wide()[l]);
    const WavefunctionV pt = momentum_transform(schwinger_state_l0(l, ctx.momentum_vbar()), m.axis);
    for (std::size_t j = 0; j < m.density.size(); ++j) {
      worst = std::max(worst, std::abs(m.density[j] - std::norm(pt.values[j])));
    }
  }
  return worst;
}

double overlap_purity(Context& ctx) {
  double worst = 0.0;
  const auto& w = ctx.wide();
  for (int a = 0; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      worst = std::max(worst, std::abs(overlap(w[a], w[b]) - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double overlap_coherent(Context& ctx) {
  const Grid1D v(-10.0, 12.0, 2201);
  const Grid1D g(-6.0, 9.0, 301), d(-7.0, 7.0, 281);
  const WignerGrid w0 = wigner_from_density(DensityMatrixV::pure(dilaton_vacuum_state(v)), g, d, ctx.opts());
  const WignerGrid wa = wigner_from_density(DensityMatrixV::pure(dilaton_coherent({2.0, 0.0}, v)), g, d, ctx.opts());
  return std::abs(overlap(w0, wa) - std::exp(-4.0));
}

double husimi_nonnegativity(Context& ctx) {
  double worst = 0.0;
  for (int l = 0; l <= 3; ++l) worst = std::max(worst, -s_smooth(ctx.wide()[l], -1.0).min_value());
  return std::max(worst, 0.0);
}

double smoothing_normalization(Context& ctx) {
  double worst = 0.0;
  for (const auto& w : ctx.wide()) worst = std::max(worst, std::abs(s_smooth(w, -1.0).integral() - w.integral()));
  return worst;
}

// --- Fock pipeline ----------------------------------------------------------------------------

FockDensityMatrix random_fock(int n_max, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  const int d = (n_max + 1) * (n_max + 1);
  Eigen::MatrixXcd a(d, 3);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < 3; ++j) a(i, j) = {nd(rng), nd(rng)};
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return FockDensityMatrix(n_max, rho);
}

double fock_sector_unitarity(Context&) {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const Eigen::MatrixXcd u = fock_to_schwinger_block(n);
    const Eigen::MatrixXcd e = u.adjoint() * u - Eigen::MatrixXcd::Identity(n + 1, n + 1);
    worst = std::max(worst, e.cwiseAbs().maxCoeff());
  }
  return worst;
}

double fock_trace_chain(Context&) {
  const FockDensityMatrix rho = random_fock(3, 7);
  const SchwingerDensityMatrix s = fock_to_schwinger(rho);
  const DensityMatrixV v = radial_reduce(s, default_vbar_grid());
  return std::max(std::abs(s.trace() - rho.trace()), std::abs(v.trace() - s.trace()));
}

double pipeline_linearity(Context& ctx) {
  const FockDensityMatrix r1 = random_fock(2, 11);
  const FockDensityMatrix r2 = random_fock(2, 12);
  const double alpha = 0.3;
  const FockDensityMatrix mix(2, alpha * r1.entries() + (1 - alpha) * r2.entries());
  PipelineGrids grids;
  grids.gamma = Grid1D(-3.0, 2.0, 26);
  grids.delta = Grid1D(-4.0, 4.0, 33);
  const WignerGrid a = end_to_end(r1, grids, ctx.opts());
  const WignerGrid b = end_to_end(r2, grids, ctx.opts());
  const WignerGrid c = end_to_end(mix, grids, ctx.opts());
  double worst = 0.0;
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    worst = std::max(worst, std::abs(c.values[k] - (alpha * a.values[k] + (1 - alpha) * b.values[k])));
  }
  return worst;
}

double pipeline_cross_route(Context& ctx) {
  // |l=1, m=0⟩ = (|2,0⟩ + |0,2⟩)/√2 up to sign in the cartesian basis
  const int n_max = 2;
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(9);
  amp[2 * 3 + 0] = 1.0 / std::sqrt(2.0);
  amp[0 * 3 + 2] = 1.0 / std::sqrt(2.0);
  PipelineGrids grids;
  grids.gamma = Grid1D(-3.0, 2.0, 51);
  grids.delta = Grid1D(-4.0, 4.0, 65);
  const WignerGrid w = end_to_end(FockDensityMatrix::pure(n_max, amp), grids, ctx.opts());
  const WignerGrid ref = wigner_l0_closed_grid(1, grids.gamma, grids.delta, ctx.opts());
  double worst = 0.0;
  for (std::size_t k = 0; k < w.values.size(); ++k) worst = std::max(worst, std::abs(w.values[k] - ref.values[k]));
  return worst;
}

// --- kernels -----------------------------------------------------------------------------------

double simd_equivalence(Context&) {
  const simd::Isa active = simd::active_isa();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t n : {1u, 3u, 7u, 64u, 129u, 1001u}) {
    const cdouble c(u(rng), u(rng));
    const double t0 = 10 * u(rng), dt = 0.3 * u(rng);
    std::vector<double> re0(n, 0.0), im0(n, 0.0), re1(n, 0.0), im1(n, 0.0);
    simd::scalar::phasor_accumulate(c, t0, dt, re0, im0);
    simd::phasor_accumulate(c, t0, dt, re1, im1);
    for (std::size_t j = 0; j < n; ++j) worst = std::max({worst, std::abs(re0[j] - re1[j]), std::abs(im0[j] - im1[j])});
    std::vector<double> x(n), y0(n), y1(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = u(rng), y0[j] = y1[j] = u(rng);
    simd::scalar::axpy(0.7, x, y0);
    simd::axpy(0.7, x, y1);
    for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(y0[j] - y1[j]));
  }
  (void)active;
  return worst;
}

const std::vector<Invariant>& registry() {
  static const std::vector<Invariant> r = {
      {"laguerre-recurrence", 1e-10, laguerre_recurrence},
      {"laguerre-derivative", 1e-6, laguerre_derivative},
      {"laguerre-orthogonality", 1e-8, laguerre_orthogonality},
      {"schwinger-orthonormality", 1e-8, schwinger_orthonormality},
      {"to-vbar-norm-grid", 1e-4, to_vbar_norm_grid},
      {"to-vbar-norm-closed", 1e-10, to_vbar_norm_closed},
      {"vacuum-norm-r", 1e-8, vacuum_norm_r},
      {"vacuum-annihilation", 1e-6, vacuum_annihilation},
      {"weyl-commutator", 1e-6, weyl_commutator},
      {"sack-commutator", 1e-6, sack_commutator},
      {"dilation-scaling", 1e-6, dilation_scaling},
      {"displacement-composition", 1e-8, displacement_composition},
      {"pr-self-adjoint", 1e-8, pr_self_adjoint},
      {"displacement-adjoint-r", 1e-6, displacement_adjoint_r},
      {"displacement-adjoint-pr", 1e-6, displacement_adjoint_pr},
      {"displacement-trace-smeared", 0.05, displacement_trace_smeared},
      {"wigner-cross-route", 1e-5, wigner_cross_route},
      {"wigner-vacuum", 1e-6, wigner_vacuum},
      {"wigner-normalization", 1e-6, wigner_normalization},
      {"wigner-reality", 1e-8, wigner_reality},
      {"wigner-bound", 1e-6, wigner_bound},
      {"wigner-negativity", -1e-3, wigner_negativity},
      {"marginal-position", 1e-5, marginal_position_check},
      {"marginal-momentum", 1e-5, marginal_momentum_check},
      {"overlap-purity", 1e-5, overlap_purity},
      {"overlap-coherent", 1e-5, overlap_coherent},
      {"husimi-nonnegativity", 1e-9, husimi_nonnegativity},
      {"smoothing-normalization", 1e-8, smoothing_normalization},
      {"fock-sector-unitarity", 1e-12, fock_sector_unitarity},
      {"fock-trace-chain", 1e-8, fock_trace_chain},
      {"pipeline-linearity", 1e-10, pipeline_linearity},
      {"pipeline-cross-route", 1e-5, pipeline_cross_route},
      {"simd-equivalence", 1e-12, simd_equivalence},
  };
  return r;
}

}  // namespace

std::vector<std::string> invariant_names() {
  std::vector<std::string> out;
  for (const auto& inv : registry()) out.emplace_back(inv.name);
  return out;
}

std::vector<InvariantResult> run_invariants(const CheckOptions& opts) {
  Context ctx(opts.threads);
  std::vector<InvariantResult> out;
  bool matched = false;
  for (const auto& inv : registry()) {
    if (opts.only && *opts.only != inv.name) continue;
    matched = true;
    InvariantResult r;
    r.name = inv.name;
    r.tolerance = opts.tolerance.value_or(inv.tolerance);
    try {
      r.measured = inv.measure(ctx);
      r.pass = std::isfinite(r.measured) && r.measured <= r.tolerance;
    } catch (const std::exception& e) {
      r.measured = std::numeric_limits<double>::quiet_NaN();
      r.error = e.what();
      r.pass = false;
    }
    out.push_back(std::move(r));
  }
  if (!matched) throw InputError("unknown invariant '" + opts.only.value_or("") + "'");
  return out;
}

}  // namespace radwig
