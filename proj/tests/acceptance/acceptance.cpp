// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <unistd.h>
#include "radwig/fock.hpp"
#include "radwig/invariants.hpp"
#include "radwig/io.hpp"
#include "radwig/operators.hpp"
#include "radwig/special_fn.hpp"
#include "radwig/states.hpp"
#include "radwig/wigner.hpp"

using namespace radwig;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[512];

template <class... A>
std::string fmt(const char* f, A... a) {
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

double max_abs_diff(const WignerGrid& a, const WignerGrid& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  return worst;
}

const Grid1D fig_gamma(-3.0, 2.0, 251);
const Grid1D fig_delta(-4.0, 4.0, 321);

// closed-form W_l on the figure window, reused by criteria 2, 7 and 8
std::vector<WignerGrid> fig_closed;

Outcome cross_route() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const auto rho = DensityMatrixV::pure(schwinger_state_l0(l, default_vbar_grid()));
    const WignerGrid d = wigner_from_density(rho, fig_gamma, fig_delta);
    fig_closed.push_back(wigner_l0_closed_grid(l, fig_gamma, fig_delta));
    worst = std::max(worst, max_abs_diff(d, fig_closed.back()));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-5 && secs < 120.0, fmt("max |W_density - W_closed| = %.3e, %.1f s", worst, secs)};
}

Outcome point_value() {
  const double bessel = 2.0 / std::numbers::pi * std::cyl_bessel_k(0.0, 1.0);
  // plain midpoint sum of (2/π)∫ exp(-cosh 2ε) dε over the whole line
  double brute = 0.0;
  const double h = 1e-4;
  for (double e = -8.0 + h / 2; e < 8.0; e += h) brute += std::exp(-std::cosh(2.0 * e));
  brute *= h * 2.0 / std::numbers::pi;
  const double closed = wigner_l0_closed(0, 0.0, 0.0);
  const double density = fig_closed.empty() ? closed
                                            : fig_closed[0].at(fig_gamma.index_of(0.0).value(),
                                                               fig_delta.index_of(0.0).value());
  const double worst = std::max({std::abs(closed - 0.268032), std::abs(closed - bessel),
                                 std::abs(closed - brute), std::abs(density - bessel)});
  return {worst < 1e-6, fmt("W_0(0,0) = %.9f, Bessel %.9f, brute force %.9f", closed, bessel, brute)};
}

Outcome normalization() {
  const Grid1D g(-9.0, 3.0, 301), d(-28.0, 28.0, 561);
  double worst = 0.0;
  std::string detail;
  for (int l = 0; l <= 3; ++l) {
    const double n = wigner_l0_closed_grid(l, g, d).integral();
    worst = std::max(worst, std::abs(n - 1.0));
    detail += fmt("l=%d: %.9f  ", l, n);
  }
  return {worst < 1e-6, detail + fmt("(max dev %.2e)", worst)};
}

// density route on a window wide enough that the cut edges carry no mass
const Grid1D wide_vbar(-16.0, 6.0, 2201);
const Grid1D wide_gamma(-15.0, 6.0, 1051);
const Grid1D wide_delta(-28.0, 28.0, 561);
std::vector<WignerGrid> wide;

void build_wide() {
  for (int l = 0; l <= 3; ++l) {
    wide.push_back(wigner_from_density(DensityMatrixV::pure(schwinger_state_l0(l, wide_vbar)), wide_gamma, wide_delta));
  }
}

Outcome marginals() {
  double pos = 0.0, mom = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const Marginal mp = marginal_position(wide[l]);
    for (std::size_t i = 0; i < mp.density.size(); ++i) {
      const double x = std::exp(2.0 * mp.axis[i]);
      const double lv = laguerre_assoc(l, 0.0, x).value;
      pos = std::max(pos, std::abs(mp.density[i] - 2.0 * x * std::exp(-x) * lv * lv));
    }
    const Marginal mm = marginal_momentum(wide[l]);
    const WavefunctionV pt = momentum_transform(schwinger_state_l0(l, Grid1D(-30.0, 5.0, 3501)), mm.axis);
    for (std::size_t j = 0; j < mm.density.size(); ++j) mom = std::max(mom, std::abs(mm.density[j] - std::norm(pt.values[j])));
  }
  return {pos < 1e-5 && mom < 1e-5, fmt("position %.3e, momentum %.3e", pos, mom)};
}

Outcome vacuum() {
  // ∫ r dr |ψ|² with r = e^v; the integrand becomes |π^{-1/4} e^{-v²/2}|² dv,
  // but we evaluate the r-basis function itself on a log-spaced radial grid.
  const std::vector<double> r = log_spaced_radii(std::exp(-12.0), std::exp(12.0), 200001);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double f0 = r[i] * std::norm(dilaton_vacuum(Basis::R, r[i]));
    const double f1 = r[i + 1] * std::norm(dilaton_vacuum(Basis::R, r[i + 1]));
    sum += 0.5 * (f0 + f1) * (r[i + 1] - r[i]);
  }
  return {std::abs(sum - 1.0) < 1e-8, fmt("norm = %.12f (N = pi^-1/4)", sum)};
}

Outcome operator_algebra() {
  const std::vector<std::string> names = {"weyl-commutator", "sack-commutator", "vacuum-annihilation",
                                          "displacement-adjoint-r", "displacement-adjoint-pr"};
  bool ok = true;
  std::string detail;
  for (const auto& name : names) {
    CheckOptions opts;
    opts.only = name;
    opts.tolerance = 1e-6;
    const InvariantResult r = run_invariants(opts).front();
    ok = ok && r.pass;
    detail += fmt("%s %.2e  ", name.c_str(), r.measured);
  }
  return {ok, detail};
}

Outcome negativity() {
  bool ok = true;
  std::string detail;
  for (int l = 0; l <= 3; ++l) {
    const double mn = std::min(fig_closed[l].min_value(), wide[l].min_value());
    if (l >= 1) ok = ok && mn < -1e-3;
    ok = ok && mn >= wigner_lower_bound() - 1e-6;
    detail += fmt("min W_%d = %.5f  ", l, mn);
  }
  return {ok, detail + fmt("(bound %.5f)", wigner_lower_bound())};
}

Outcome pipeline() {
  // |l=1,m=0⟩ = |n+=1,n-=1⟩ = (a_x†² + a_y†²)/2 |0⟩ = (|2,0⟩ + |0,2⟩)/√2
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(9);
  amp[2 * 3 + 0] = amp[0 * 3 + 2] = 1.0 / std::sqrt(2.0);
  PipelineGrids grids;
  grids.gamma = fig_gamma;
  grids.delta = fig_delta;
  const WignerGrid w = end_to_end(FockDensityMatrix::pure(2, amp), grids);
  const double diff = max_abs_diff(w, fig_closed[1]);
  double unitarity = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const Eigen::MatrixXcd u = fock_to_schwinger_block(n);
    unitarity = std::max(unitarity, (u.adjoint() * u - Eigen::MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
  }
  return {diff < 1e-5 && unitarity < 1e-12, fmt("W_1 diff %.3e, block unitarity %.3e", diff, unitarity)};
}

Outcome overlaps() {
  double worst = 0.0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) worst = std::max(worst, std::abs(overlap(wide[a], wide[b]) - (a == b ? 1.0 : 0.0)));
  return {worst < 1e-4, fmt("max |2pi<W_a,W_b> - delta_ab| = %.3e", worst)};
}

// Sign changes of W_l(γ, 0) along γ, ignoring samples below `floor` in magnitude.
int sign_changes(const WignerGrid& w, double floor) {
  const std::size_t j = w.delta.index_of(0.0).value();
  int changes = 0, last = 0;
  for (std::size_t i = 0; i < w.gamma.size(); ++i) {
    const double v = w.at(i, j);
    if (std::abs(v) < floor) continue;
    const int s = v > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Largest γ where the position marginal 2x e^{-x} L_l(x)², x = e^{2γ}, vanishes.
double outer_marginal_node(int l) {
  auto f = [l](double g) { return laguerre_assoc(l, 0.0, std::exp(2.0 * g)).value; };
  double hi = 4.0;
  while (f(hi - 0.01) * f(hi) > 0.0) hi -= 0.01;
  double lo = hi - 0.01;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// W_0: positive along δ = 0 and each γ row peaks there (the ε integrand is
// positive, so the cosine transform is largest at δ = 0).
// W_l, l >= 1: negative at the outermost marginal node, with an even number
// of sign flips along the δ = 0 cut between 2 and 2l.
bool shape_ok(int l, const WignerGrid& w, int flips) {
  const std::size_t j0 = w.delta.index_of(0.0).value();
  if (l == 0) {
    for (std::size_t i = 0; i < w.gamma.size(); ++i) {
      if (w.at(i, j0) <= 0.0) return false;
      for (std::size_t j = 0; j < w.delta.size(); ++j)
        if (w.at(i, j) > w.at(i, j0)) return false;
    }
    return flips == 0;
  }
  return wigner_l0_closed(l, outer_marginal_node(l), 0.0) < 0.0 && flips % 2 == 0 && flips >= 2 &&
         flips <= 2 * l;
}

Outcome figure() {
  const fs::path dir = fs::temp_directory_path() / ("radwig_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string out = (dir / "fig1.csv").string();
  const std::string cmd = std::string(RADWIG_CLI) + " wl --l 0 1 2 3 --gamma -3:2:251 --delta -4:4:321 --out " + out + " >/dev/null";
  const int status = std::system(cmd.c_str());
  bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  std::string detail = "sign flips along delta=0:";
  for (int l = 0; ok && l <= 3; ++l) {
    const std::string stem = (dir / ("fig1_l" + std::to_string(l))).string();
    ok = fs::exists(stem + ".csv") && fs::exists(stem + ".gp");
    if (!ok) break;
    const WignerGrid w = io::grid_from_csv(io::read_file(stem + ".csv"));
    const int n = sign_changes(w, 1e-4);
    ok = shape_ok(l, w, n);
    detail += fmt(" l=%d:%d", l, n);
  }
  fs::remove_all(dir);
  return {ok, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cross-route agreement", cross_route},
      {2, "point value W_0(0,0)", point_value},
      {3, "normalization", normalization},
      {4, "marginals", [] { build_wide(); return marginals(); }},
      {5, "vacuum normalization", vacuum},
      {6, "operator algebra", operator_algebra},
      {7, "negativity and bound", negativity},
      {8, "fock pipeline", pipeline},
      {9, "orthogonality overlaps", overlaps},
      {10, "figure grids and sign pattern", figure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %2d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
