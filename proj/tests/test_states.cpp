#include <doctest.h>

#include <cmath>
#include <numbers>


#include "radwig/error.hpp"
#include "radwig/operators.hpp"
#include "radwig/quadrature.hpp"
#include "radwig/states.hpp"

using namespace radwig;

namespace {
constexpr double kPi = std::numbers::pi;

double radial_norm(const SchwingerLabel& label) {
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double v = radial_wavefunction(label, r);
    return r * v * v;
  };
  return integrate_gk21(f, 0.0, 6.0).value + integrate_gk21(f, 6.0, 30.0).value;
}
}  // namespace

TEST_CASE("labels") {
  const auto a = SchwingerLabel::from_lm(HalfInt::from_twice(3), HalfInt::from_twice(1));
  CHECK(a.n_plus() == 2);
  CHECK(a.n_minus() == 1);
  CHECK(a.l().to_string() == "3/2");
  CHECK(a.m().to_string() == "1/2");
  CHECK(HalfInt::from_twice(-1).to_string() == "-1/2");
  CHECK(HalfInt::from_int(2).to_string() == "2");
  CHECK(a.radial_degree() == 1);
  CHECK(a.angular_order() == 1);
  CHECK_THROWS_AS(SchwingerLabel::from_lm(HalfInt::from_int(1), HalfInt::from_twice(1)), DomainError);
  CHECK_THROWS_AS(SchwingerLabel::from_lm(HalfInt::from_int(1), HalfInt::from_int(2)), DomainError);
  CHECK_THROWS_AS(SchwingerLabel::from_occupations(1, 1, 0.0), DomainError);
}

TEST_CASE("radial functions near the origin and their norms") {
  const auto l00 = SchwingerLabel::from_occupations(0, 0);
  const auto l10 = SchwingerLabel::from_occupations(1, 1);
  CHECK(radial_wavefunction(l00, 1e-9) == doctest::Approx(std::sqrt(2.0)));
  CHECK(radial_wavefunction(l10, 1e-9) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(radial_norm(SchwingerLabel::from_lm(HalfInt::from_int(2), HalfInt::from_int(1))) ==
        doctest::Approx(1.0).epsilon(1e-8));
  for (auto [p, m] : {std::pair{0, 0}, {3, 0}, {2, 5}, {4, 4}, {1, 2}}) {
    CHECK(radial_norm(SchwingerLabel::from_occupations(p, m)) == doctest::Approx(1.0).epsilon(1e-8));
  }
  CHECK_THROWS_AS(radial_wavefunction(l00, 0.0), DomainError);
}

TEST_CASE("R_{1,1} matches a finite-difference radial eigenproblem") {
  // f = √r R obeys -f''/2 + (M² - 1/4) f / (2r²) + r² f / 2 = E f with M = 2m = 2.
  const int n = 20000;
  const double rmax = 10.0, h = rmax / (n + 1);
  std::vector<double> diag(n);
  const double off = -0.5 / (h * h);
  for (int i = 0; i < n; ++i) {
    const double r = (i + 1) * h;
    diag[i] = 1.0 / (h * h) + (4.0 - 0.25) / (2.0 * r * r) + 0.5 * r * r;
  }
  // inverse iteration with the shift just below the expected level
  const double shift = 2.99;
  std::vector<double> f(n, 1.0), c(n), d(n);
  double eig = 0.0;
  for (int it = 0; it < 30; ++it) {
    c[0] = off / (diag[0] - shift);
    d[0] = f[0] / (diag[0] - shift);
    for (int i = 1; i < n; ++i) {
      const double m = diag[i] - shift - off * c[i - 1];
      c[i] = off / m;
      d[i] = (f[i] - off * d[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) d[i] -= c[i] * d[i + 1];
    double norm = 0.0, dot = 0.0;
    for (int i = 0; i < n; ++i) norm += d[i] * d[i], dot += d[i] * f[i];
    eig = shift + dot / norm;
    for (int i = 0; i < n; ++i) f[i] = d[i] / std::sqrt(norm * h);
  }
  CHECK(eig == doctest::Approx(3.0).epsilon(1e-5));
  const auto label = SchwingerLabel::from_lm(HalfInt::from_int(1), HalfInt::from_int(1));
  // eigenvector sign is arbitrary; fix it where the state is large
  const double sign = f[static_cast<int>(std::sqrt(2.0) / h)] > 0.0 ? 1.0 : -1.0;
  double diff2 = 0.0, peak_r = 0.0, peak = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = (i + 1) * h;
    const double want = std::sqrt(r) * radial_wavefunction(label, r);
    if (std::abs(want) / std::sqrt(r) > peak) peak = std::abs(want) / std::sqrt(r), peak_r = r;
    CHECK(radial_wavefunction(label, r) >= 0.0);
    diff2 += h * std::pow(sign * f[i] - want, 2);
  }
  CHECK(std::sqrt(diff2) < 1e-6);
  CHECK(peak_r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-2));
}

TEST_CASE("v-bar Schwinger states") {
  CHECK(vbar_schwinger_l0(0, 0.0) == doctest::Approx(std::sqrt(2.0) * std::exp(-0.5)).epsilon(1e-15));
  CHECK(vbar_schwinger_l0(0, 0.0) == doctest::Approx(0.857763).epsilon(1e-6));
  CHECK(std::abs(vbar_schwinger_l0(1, 0.0)) < 1e-15);
  CHECK(std::isfinite(vbar_schwinger_l0(3, 10.0)));
  CHECK(vbar_schwinger_l0(3, 10.0) == 0.0);
  const Grid1D g = default_vbar_grid();
  for (int l = 0; l <= 3; ++l) {
    const auto psi = schwinger_state_l0(l, g);
    CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(psi.warnings.empty());
  }
  // same function through the closed-form rescaling of R_{l,0}
  const auto label = SchwingerLabel::from_occupations(2, 2);
  const auto direct = schwinger_state_l0(2, g);
  const auto rescaled = to_vbar([&](double r) { return cdouble(radial_wavefunction(label, r)); }, g);
  for (std::size_t i = 0; i < g.size(); i += 50) {
    CHECK(rescaled.values[i].real() == doctest::Approx(direct.values[i].real()).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("to_vbar through interpolation") {
  const auto label = SchwingerLabel::from_occupations(0, 0);
  const auto psi_r = sample_radial(label, log_spaced_radii(1e-6, 30.0, 3000));
  const Grid1D g(-12.0, 3.0, 1501);
  const auto v = to_vbar(psi_r, g);
  CHECK(v.norm_squared() == doctest::Approx(1.0).epsilon(1e-4));
  for (std::size_t i = 0; i < g.size(); i += 25) {
    const double want = std::sqrt(2.0) * std::exp(g[i]) * std::exp(-std::exp(2.0 * g[i]) / 2.0);
    CHECK(v.values[i].real() == doctest::Approx(want).epsilon(1e-5).scale(1.0));
  }

  // narrow bump at r = 1
  const auto radii = log_spaced_radii(0.5, 1.5, 4001);
  std::vector<cdouble> bump;
  for (double r : radii) bump.emplace_back(std::exp(-(r - 1.0) * (r - 1.0) / (2 * 0.05 * 0.05)));
  const Grid1D fine(-0.4, 0.4, 8001);
  const auto b = to_vbar(WavefunctionR(radii, bump), fine);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    if (std::abs(b.values[i]) > std::abs(b.values[arg])) arg = i;
  }
  CHECK(std::abs(fine[arg]) < 0.005);
  CHECK(b.values[4000].real() == doctest::Approx(1.0).epsilon(1e-6));

  // v-bar range partly outside the radii: zero-filled with a warning
  const auto part = to_vbar(psi_r, Grid1D(-20.0, 0.0, 201));
  CHECK_FALSE(part.warnings.empty());
  CHECK_THROWS_AS(to_vbar(psi_r, Grid1D(5.0, 6.0, 11)), DomainError);
}

TEST_CASE("dilaton vacuum") {
  CHECK(std::abs(dilaton_vacuum(Basis::VBar, 0.0)) == doctest::Approx(std::pow(kPi, -0.25)));
  CHECK(std::abs(dilaton_vacuum(Basis::R, 1.0)) == doctest::Approx(std::pow(kPi, -0.25)));
  CHECK(std::abs(dilaton_vacuum(Basis::VBar, 0.0)) == doctest::Approx(0.751126).epsilon(1e-6));
  CHECK_THROWS_AS(dilaton_vacuum(Basis::R, 0.0), DomainError);
  auto f = [](double r) {
    if (r <= 0.0) return 0.0;
    return r * std::norm(dilaton_vacuum(Basis::R, r));
  };
  const double norm = integrate_gk21(f, 0.0, 1.0).value + integrate_gk21(f, 1.0, 20.0).value +
                      integrate_gk21(f, 20.0, 1e4).value;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("dilaton coherent states") {
  const Grid1D g(-12.0, 12.0, 2401);
  const auto vac = dilaton_vacuum_state(g);
  const auto zero = dilaton_coherent({0.0, 0.0}, g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(zero.values[i] - vac.values[i]) < 1e-15);

  const auto a = dilaton_coherent({1.0 / std::sqrt(2.0), 0.0}, g);
  CHECK(expectation({OperatorKind::V}, a).real() == doctest::Approx(1.0).epsilon(1e-8));
  const auto b = dilaton_coherent({0.0, 1.0 / std::sqrt(2.0)}, g);
  CHECK(expectation({OperatorKind::Pr}, b).real() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(b.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

  // minimum-uncertainty widths
  const auto c = dilaton_coherent({0.4, -0.9}, g);
  const double v = expectation({OperatorKind::V}, c).real();
  const double p = expectation({OperatorKind::Pr}, c).real();
  const auto vv = apply_v(apply_v(c));
  const auto pp = apply_pr(apply_pr(c));
  const double var_v = inner_product(c, vv).real() - v * v;
  const double var_p = inner_product(c, pp).real() - p * p;
  CHECK(var_v == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(var_p == doctest::Approx(0.5).epsilon(1e-8));

  // D(α) built from â agrees with the two-sided displacement of the vacuum
  const cdouble alpha(0.6, 0.3);
  const auto via_d = apply_displacement(std::sqrt(2.0) * alpha.imag(), -std::sqrt(2.0) * alpha.real(), vac);
  const auto closed = dilaton_coherent(alpha, g);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(via_d.values[i] - closed.values[i]));
  CHECK(worst < 1e-10);

  // eigenstate of the annihilation operator
  const auto ac = apply_annihilation(closed);
  double resid = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) resid = std::max(resid, std::abs(ac.values[i] - alpha * closed.values[i]));
  CHECK(resid < 1e-10);

  const auto clipped = dilaton_coherent({5.0, 0.0}, Grid1D(-3.0, 3.0, 601));
  CHECK_FALSE(clipped.warnings.empty());
}
