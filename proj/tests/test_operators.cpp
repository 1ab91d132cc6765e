#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radwig/error.hpp"
#include "radwig/operators.hpp"
#include "radwig/states.hpp"

using namespace radwig;

namespace {
constexpr double kPi = std::numbers::pi;
const cdouble I(0.0, 1.0);

WavefunctionR sampled(const std::vector<double>& r, double (*f)(double)) {
  std::vector<cdouble> v;
  for (double x : r) v.emplace_back(f(x));
  return WavefunctionR(r, v);
}

std::vector<double> uniform_r(double a, double b, std::size_t n) {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return r;
}
}  // namespace

TEST_CASE("P^D in the r basis") {
  const auto r = uniform_r(0.5, 6.0, 2001);
  const auto inv_sqrt = apply_pd(sampled(r, [](double x) { return 1.0 / std::sqrt(x); }));
  for (std::size_t i = 10; i + 10 < r.size(); ++i) CHECK(std::abs(inv_sqrt.values[i]) < 1e-8);

  const auto g = apply_pd(sampled(r, [](double x) { return std::exp(-x * x / 2); }));
  for (std::size_t i = 10; i + 10 < r.size(); i += 7) {
    const double x = r[i];
    const cdouble want = -I * (-x + 1.0 / (2 * x)) * std::exp(-x * x / 2);
    CHECK(std::abs(g.values[i] - want) <= 1e-6 * std::max(std::abs(want), 1e-3));
  }

  // [r, P^D] = i
  const auto psi = sampled(r, [](double x) { return std::exp(-(x - 2) * (x - 2)); });
  const auto a = apply_r(apply_pd(psi));
  const auto b = apply_pd(apply_r(psi));
  for (std::size_t i = 10; i + 10 < r.size(); i += 5) {
    CHECK(std::abs(a.values[i] - b.values[i] - I * psi.values[i]) < 1e-6);
  }
  CHECK_THROWS_AS(apply_pd(WavefunctionR({1, 2, 3, 4}, {1, 1, 1, 1})), InputError);
}

TEST_CASE("P^r in both bases") {
  const Grid1D g(-10.0, 10.0, 2001);
  const auto vac = dilaton_vacuum_state(g);
  const auto p = apply_pr(vac);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(p.values[i] - I * g[i] * vac.values[i]));
  CHECK(worst < 1e-8);
  CHECK(p.warnings.empty());

  const auto fd = apply_pr(vac, Representation::FiniteDifference);
  worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(fd.values[i] - p.values[i]));
  CHECK(worst < 1e-6);

  // windowed plane wave: -i d/dv of e^{ikv} w(v) is (k w - i w') e^{ikv}
  const double k = 3.0;
  WavefunctionV wave{g, std::vector<cdouble>(g.size()), {}};
  for (std::size_t i = 0; i < g.size(); ++i) wave.values[i] = std::exp(I * k * g[i]) * std::exp(-std::pow(g[i] / 4.0, 8));
  const auto pw = apply_pr(wave);
  for (std::size_t i = 600; i <= 1400; i += 10) {
    const double v = g[i], w = std::exp(-std::pow(v / 4.0, 8));
    const double dw = -8.0 * std::pow(v / 4.0, 7) / 4.0 * w;
    CHECK(std::abs(pw.values[i] - (k * w - I * dw) * std::exp(I * k * v)) < 1e-6);
  }

  // not decayed at the edges: wraparound warning
  const auto l0 = schwinger_state_l0(0, default_vbar_grid());
  CHECK_FALSE(apply_pr(l0).warnings.empty());

  // r basis: P^r = -i(r∂_r + 1); on the vacuum (1/r)e^{-(ln r)²/2}: i ln r ψ
  const auto radii = log_spaced_radii(1e-3, 1e3, 6001);
  std::vector<cdouble> v;
  for (double x : radii) v.push_back(dilaton_vacuum(Basis::R, x));
  const auto pr = apply_pr(WavefunctionR(radii, v));
  for (std::size_t i = 10; i + 10 < radii.size(); i += 50) {
    CHECK(std::abs(pr.values[i] - I * std::log(radii[i]) * v[i]) < 1e-6);
  }
}

TEST_CASE("expectation values") {
  const Grid1D g(-12.0, 12.0, 2401);
  const auto vac = dilaton_vacuum_state(g);
  CHECK(std::abs(expectation({OperatorKind::V}, vac)) < 1e-10);
  CHECK(expectation({OperatorKind::R}, vac).real() == doctest::Approx(std::exp(0.25)).epsilon(1e-10));
  CHECK(std::abs(expectation({OperatorKind::Pr}, schwinger_state_l0(2, Grid1D(-30.0, 5.0, 3501)))) < 1e-9);
  CHECK_THROWS_AS(expectation({OperatorKind::PD}, vac), BasisMismatchError);
  WavefunctionR rpsi(log_spaced_radii(0.01, 10, 100), std::vector<cdouble>(100, 1.0));
  CHECK_THROWS_AS(expectation({OperatorKind::Displacement, 0.1, 0.1}, rpsi), BasisMismatchError);
}

TEST_CASE("translations and displacements") {
  const Grid1D g(-12.0, 12.0, 2401);
  const auto psi = dilaton_coherent({0.3, 0.2}, g);
  const auto same = apply_displacement(0.0, 0.0, psi);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(same.values[i] - psi.values[i]) < 1e-14);

  // (Dψ)(v) = e^{iλ(v+μ/2)} ψ(v+μ) against closed-form samples
  const double lam = 0.7, mu = -0.9;
  const auto d = apply_displacement(lam, mu, psi);
  const cdouble alpha(0.3, 0.2);
  const double q = std::sqrt(2.0) * alpha.real(), p = std::sqrt(2.0) * alpha.imag();
  for (std::size_t i = 0; i < g.size(); i += 13) {
    const double x = g[i] + mu;
    const cdouble shifted = std::exp(I * (-q * p / 2 + p * x)) * std::pow(kPi, -0.25) * std::exp(-(x - q) * (x - q) / 2);
    CHECK(std::abs(d.values[i] - std::exp(I * lam * (g[i] + mu / 2)) * shifted) < 1e-12);
  }
  const auto back = apply_displacement_adjoint(lam, mu, d);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(back.values[i] - psi.values[i]) < 1e-12);

  // e^{iςP} translates by +ς, so <r> scales by e^{-ς}
  const double before = expectation({OperatorKind::R}, psi).real();
  const double after = expectation({OperatorKind::R}, translate(psi, 0.5)).real();
  CHECK(after == doctest::Approx(std::exp(-0.5) * before).epsilon(1e-10));

  CHECK(translation_lost_mass(psi, 30.0) > 0.99);
  CHECK_THROWS_AS(apply_displacement(0.0, 20.0, psi), TruncationError);
}

TEST_CASE("momentum transform") {
  const Grid1D g(-12.0, 12.0, 2401);
  const Grid1D pg(-6.0, 6.0, 241);
  const auto t = momentum_transform(dilaton_vacuum_state(g), pg);
  for (std::size_t j = 0; j < pg.size(); ++j) {
    CHECK(std::abs(t.values[j] - std::pow(kPi, -0.25) * std::exp(-pg[j] * pg[j] / 2)) < 1e-12);
  }
  CHECK(t.norm_squared() == doctest::Approx(1.0).epsilon(1e-8));

  const auto shifted = momentum_transform(dilaton_coherent({1.0 / std::sqrt(2.0), 0.0}, g), pg);
  double mean = 0.0, norm = 0.0;
  for (std::size_t j = 0; j < pg.size(); ++j) mean += pg[j] * std::norm(shifted.values[j]), norm += std::norm(shifted.values[j]);
  CHECK(std::abs(mean / norm) < 1e-12);
}

TEST_CASE("smeared displacement trace") {
  for (double mu : {-0.5, 0.0, 0.5}) {
    CHECK(displacement_trace_weight(0.2, mu, 0.05) == doctest::Approx(1.0).epsilon(0.05));
  }
}
