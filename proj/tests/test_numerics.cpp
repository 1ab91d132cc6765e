#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "radwig/error.hpp"
#include "radwig/grid.hpp"
#include "radwig/parallel.hpp"
#include "radwig/quadrature.hpp"
#include "radwig/simd/kernels.hpp"

using namespace radwig;

TEST_CASE("Grid1D") {
  const Grid1D g(-1.0, 1.0, 5);
  CHECK(g.spacing() == 0.5);
  CHECK(g[4] == 1.0);
  CHECK(g.index_of(0.5).value() == 3);
  CHECK_FALSE(g.index_of(0.25).has_value());
  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 2), InputError);
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 3), InputError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 1), InputError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 0), InputError);

  const Grid1D one(0.0, 0.0, 1);
  CHECK(one.degenerate());
  CHECK(one.size() == 1);
  CHECK(trapezoid_weights(one) == std::vector<double>{0.0});

  const auto w = trapezoid_weights(g);
  CHECK(w == std::vector<double>{0.25, 0.5, 0.5, 0.5, 0.25});
}

TEST_CASE("gk21 integrates known integrals") {
  const auto r1 = integrate_gk21([](double x) { return std::exp(-x * x); }, -10.0, 10.0);
  CHECK(r1.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  const auto r2 = integrate_gk21([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(r2.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  QuadratureOptions q;
  q.max_initial_width = 0.1;
  const auto r3 = integrate_gk21([](double x) { return std::cos(40.0 * x); }, 0.0, 3.0, q);
  CHECK(r3.value == doctest::Approx(std::sin(120.0) / 40.0).epsilon(1e-12));
  CHECK(r3.intervals >= 30);
}

TEST_CASE("gk21 gives up with an accuracy error") {
  QuadratureOptions q;
  q.max_intervals = 3;
  q.abs_tol = 1e-15;
  q.rel_tol = 1e-15;
  CHECK_THROWS_AS(integrate_gk21([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, q), AccuracyError);
}

TEST_CASE("vector gk21 matches component-wise scalar runs") {
  const std::vector<double> freq{0.0, 1.0, 5.0, 12.0};
  QuadratureOptions q;
  q.max_initial_width = 0.2;
  auto sink = [&](double x, double wk, double wg, std::span<double> k, std::span<double> g) {
    for (std::size_t j = 0; j < freq.size(); ++j) {
      const double f = std::exp(-x) * std::cos(freq[j] * x);
      k[j] += wk * f;
      g[j] += wg * f;
    }
  };
  const auto r = integrate_gk21_vector(sink, freq.size(), 0.0, 30.0, q);
  for (std::size_t j = 0; j < freq.size(); ++j) {
    const double want = 1.0 / (1.0 + freq[j] * freq[j]);  // ∫_0^∞ e^{-x} cos(ωx) dx
    CHECK(r.value[j] == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) { if (i == 7) throw InputError("x"); }), InputError);
}

TEST_CASE("every available kernel variant matches the scalar reference") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2, simd::Isa::Neon}) {
    if (!simd::isa_available(isa)) continue;
    CAPTURE(simd::isa_name(isa));
    simd::force_isa(isa);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 63u, 64u, 65u, 200u, 4099u}) {
      const std::complex<double> c(u(rng), u(rng));
      const double t0 = 50.0 * u(rng), dt = u(rng);
      std::vector<double> re0(n, 0.25), im0(n, -0.5), re1(n, 0.25), im1(n, -0.5);
      simd::scalar::phasor_accumulate(c, t0, dt, re0, im0);
      simd::phasor_accumulate(c, t0, dt, re1, im1);
      for (std::size_t j = 0; j < n; ++j) {
        // the phase argument reaches a few thousand radians; allow its rounding
        const double tol = 1e-14 * (1.0 + std::abs(t0 + dt * static_cast<double>(j)));
        CHECK(std::abs(re0[j] - re1[j]) < tol);
        CHECK(std::abs(im0[j] - im1[j]) < tol);
      }
      std::vector<double> re2(n, 0.0), re3(n, 0.0);
      simd::scalar::phasor_accumulate(c, t0, dt, re2, {});
      simd::phasor_accumulate(c, t0, dt, re3, {});
      for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(re2[j] - re3[j]) < 1e-14 * (1.0 + std::abs(t0 + dt * static_cast<double>(j))));

      std::vector<double> x(n), y0(n), y1(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = u(rng), y0[j] = y1[j] = u(rng);
      simd::scalar::axpy(-1.3, x, y0);
      simd::axpy(-1.3, x, y1);
      for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(y0[j] - y1[j]) < 1e-15);
    }
  }
  simd::reset_isa();
}

TEST_CASE("forcing an unavailable variant is refused") {
  for (auto isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
    if (!simd::isa_available(isa)) CHECK_THROWS(simd::force_isa(isa));
  }
  simd::reset_isa();
}
