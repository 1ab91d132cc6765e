#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "radwig/grid.hpp"
#include "radwig/states.hpp"

namespace radwig {

/// Phase-space bound min W >= -1/(πħ) at ħ = 1.
double wigner_lower_bound();

/// Factor c in c·∬W₁W₂ dγ dδ = |⟨ψ₁|ψ₂⟩|² for W normalized as
/// W = (2π)^{-1} ∫ dε e^{-iεδ} ⟨γ+ε/2|ρ|γ-ε/2⟩. Equals 2π.
double overlap_convention_factor();

struct WignerMeta {
  std::optional<int> l;
  double s = 0.0;
  bool hbar_one = true;
  std::string route;  // "density", "closed-form", "pipeline", "smoothed", ...
  double max_imag = 0.0;
  double overlap_factor = 0.0;  // filled with overlap_convention_factor()
  std::map<std::string, double> diagnostics;
  std::vector<std::string> warnings;
};

/// W sampled on γ × δ, row-major over γ then δ.
struct WignerGrid {
  Grid1D gamma;
  Grid1D delta;
  std::vector<double> values;
  WignerMeta meta;

  WignerGrid(Grid1D gamma_axis, Grid1D delta_axis);

  double& at(std::size_t i, std::size_t j) { return values[i * delta.size() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * delta.size() + j]; }

  /// ∬ W dγ dδ (trapezoid)
  double integral() const;
  double min_value() const;
  double max_value() const;
};

/// ⟨v̄_i|ρ|v̄_j⟩ on a v̄ grid; trace Σ ρ_ii·spacing.
class DensityMatrixV {
 public:
  enum class TraceCheck { Strict, Warn };

  /// Validates Hermiticity (max |ρ - ρ†| <= herm_tol, else ValidationError)
  /// and unit trace (|tr - 1| <= trace_tol; Strict throws, Warn records).
  DensityMatrixV(Grid1D grid, Eigen::MatrixXcd entries, TraceCheck check = TraceCheck::Strict,
                 double herm_tol = 1e-10, double trace_tol = 1e-8);

  static DensityMatrixV pure(const WavefunctionV& psi, TraceCheck check = TraceCheck::Strict);

  const Grid1D& grid() const noexcept { return grid_; }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  double trace() const;
  double hermiticity_error() const;
  /// Smallest eigenvalue of ρ·spacing (O(N³); meant for validation runs).
  double min_eigenvalue() const;

 private:
  Grid1D grid_;
  Eigen::MatrixXcd entries_;
  std::vector<std::string> warnings_;
};

struct WignerOptions {
  int threads = 0;               // 0: hardware concurrency
  double max_imag_tol = 1e-8;    // density route reality assertion
  double abs_tol = 1e-10;        // closed form, absolute on W
  double rel_tol = 1e-8;         // closed form, relative
  double log_cutoff = 40.0;      // truncate where log-integrand < peak - cutoff
  double gamma_floor = -10.0;    // closed form refuses γ below this
  int max_intervals = 20000;
};

/// W(γ,δ) = (2π)^{-1} ∫ dε e^{-iεδ} ρ(γ+ε/2, γ-ε/2). Each γ must sit on a
/// multiple of half the v̄ spacing (AlignmentError otherwise); the ε sum uses
/// the stored samples ρ(v̄_a, v̄_b) with a + b fixed, trapezoid in ε.
WignerGrid wigner_from_density(const DensityMatrixV& rho, const Grid1D& gamma,
                               const Grid1D& delta, const WignerOptions& opts = {});

/// W_l(γ,δ) = (2e^{2γ}/π) ∫ dε e^{-2iεδ} exp(-e^{2γ}cosh 2ε) L_l(e^{2(γ+ε)}) L_l(e^{2(γ-ε)})
/// for ρ = |l,0⟩⟨l,0|, as a cosine transform over [0, ε_max] with
/// adaptive Gauss–Kronrod refinement.
double wigner_l0_closed(int l, double gamma, double delta, const WignerOptions& opts = {});

/// Same integral on a whole grid: one adaptive partition per γ row shared
/// by all δ, error controlled on the worst δ.
WignerGrid wigner_l0_closed_grid(int l, const Grid1D& gamma, const Grid1D& delta,
                                 const WignerOptions& opts = {});

/// Upper end of the ε range kept for row γ (exposed for tests).
double closed_form_epsilon_max(int l, double gamma, double log_cutoff = 40.0);

struct Marginal {
  Grid1D axis;
  std::vector<double> density;
  double edge_mass = 0.0;  // trapezoid line integral of |W| along the cut edges
  std::vector<std::string> warnings;
};

/// ∫ W dδ on the γ axis. TruncationError when edge_mass > max_edge_mass.
Marginal marginal_position(const WignerGrid& w, double max_edge_mass = 1e-6);
/// ∫ W dγ on the δ axis.
Marginal marginal_momentum(const WignerGrid& w, double max_edge_mass = 1e-6);

/// 2π ∬ W₁W₂ dγ dδ. Grids must be identical.
double overlap(const WignerGrid& w1, const WignerGrid& w2);

/// s-ordered distribution for s <= 0: Gaussian convolution with variance
/// |s|/2 per axis (discrete kernel normalized to unit mass). s > 0 throws
/// UnsupportedOrderError.
WignerGrid s_smooth(const WignerGrid& w, double s);

}  // namespace radwig
