#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "radwig/grid.hpp"

namespace radwig {

using cdouble = std::complex<double>;

/// Exact half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  std::string to_string() const;  // "3/2", "-1/2", "2"

  friend constexpr bool operator==(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Schwinger angular-momentum label |l, m⟩ of the 2D isotropic oscillator,
/// stored as the circular-mode occupations n± = l ± m.
class SchwingerLabel {
 public:
  static SchwingerLabel from_occupations(int n_plus, int n_minus, double beta = 1.0);
  /// Throws DomainError unless l ± m are nonnegative integers.
  static SchwingerLabel from_lm(HalfInt l, HalfInt m, double beta = 1.0);

  int n_plus() const noexcept { return n_plus_; }
  int n_minus() const noexcept { return n_minus_; }
  HalfInt l() const noexcept { return HalfInt::from_twice(n_plus_ + n_minus_); }
  HalfInt m() const noexcept { return HalfInt::from_twice(n_plus_ - n_minus_); }
  double beta() const noexcept { return beta_; }

  /// l - |m|: degree of the Laguerre factor.
  int radial_degree() const noexcept { return n_plus_ < n_minus_ ? n_plus_ : n_minus_; }
  /// 2|m|: order of the Laguerre factor and the power of βr.
  int angular_order() const noexcept {
    return n_plus_ > n_minus_ ? n_plus_ - n_minus_ : n_minus_ - n_plus_;
  }

  friend bool operator==(const SchwingerLabel&, const SchwingerLabel&) = default;

 private:
  SchwingerLabel(int n_plus, int n_minus, double beta)
      : n_plus_(n_plus), n_minus_(n_minus), beta_(beta) {}
  int n_plus_;
  int n_minus_;
  double beta_;
};

/// Samples on a v̄ grid, measure dv̄. Operator outputs reuse this type
/// without a normalization guarantee; state constructors return unit norm.
struct WavefunctionV {
  Grid1D grid;
  std::vector<cdouble> values;
  std::vector<std::string> warnings;

  double norm_squared() const;  // trapezoid ∫|ψ|² dv̄
};

/// Samples on strictly positive (possibly log-spaced) radii, measure r dr.
struct WavefunctionR {
  std::vector<double> r;
  std::vector<cdouble> values;
  std::vector<std::string> warnings;

  WavefunctionR() = default;
  /// Throws DomainError unless r is strictly increasing and positive.
  WavefunctionR(std::vector<double> radii, std::vector<cdouble> samples);

  double norm_squared() const;  // trapezoid ∫ r |ψ|² dr
};

/// n log-spaced radii in [r_min, r_max].
std::vector<double> log_spaced_radii(double r_min, double r_max, std::size_t n);

/// v̄ window used when nothing else is requested: [-10, 4], spacing 0.01.
Grid1D default_vbar_grid();

// --- closed forms -----------------------------------------------------------

/// R_{l,m}(r) = β √(2(l-|m|)!/(l+|m|)!) (βr)^{2|m|} e^{-β²r²/2}
///              L_{l-|m|}^{2|m|}(β²r²) (-1)^{l-|m|}, assembled in log form.
/// Throws DomainError for r <= 0.
double radial_wavefunction(const SchwingerLabel& label, double r);

/// e^{v̄} R_{l,m}(e^{v̄}): the radial function in the rescaled v̄ basis.
double vbar_schwinger(const SchwingerLabel& label, double vbar);

/// ⟨v̄|l,0⟩ = √2 e^{v̄} e^{-e^{2v̄}/2} L_l(e^{2v̄}) (-1)^l  (ħ = β = 1).
double vbar_schwinger_l0(int l, double vbar);

WavefunctionR sample_radial(const SchwingerLabel& label, std::vector<double> radii);
WavefunctionV schwinger_state_v(const SchwingerLabel& label, const Grid1D& grid);
WavefunctionV schwinger_state_l0(int l, const Grid1D& grid);

// --- r basis -> v̄ basis -------------------------------------------------------

/// ψ•(v̄) = e^{v̄} ψ_r(e^{v̄}) with monotone cubic (Fritsch–Carlson)
/// interpolation of the real and imaginary parts. Points outside the r
/// support are set to zero and reported in `warnings`; an empty overlap
/// throws DomainError.
WavefunctionV to_vbar(const WavefunctionR& psi, const Grid1D& target);

/// Closed-form path: ψ•(v̄) = e^{v̄} ψ_r(e^{v̄}) evaluated exactly.
WavefunctionV to_vbar(const std::function<cdouble(double)>& psi_r, const Grid1D& target);

// --- dilaton states -----------------------------------------------------------

enum class Basis { VBar, R };

/// Vacuum of â = (v̂ + iP̂^r)/√2. v̄ basis: π^{-1/4} e^{-v̄²/2}; r basis:
/// π^{-1/4} e^{-(ln r)²/2} / r, unit norm in both measures.
cdouble dilaton_vacuum(Basis basis, double point);

WavefunctionV dilaton_vacuum_state(const Grid1D& grid);

/// D(α)|0⟩ with D(α) = exp(α â† - α* â). Equals the two-sided displacement
/// D(λ = √2 Im α, μ = -√2 Re α) of the vacuum, evaluated in closed form:
/// e^{-i q p/2} e^{i p v̄} π^{-1/4} e^{-(v̄-q)²/2} with q = √2 Re α, p = √2 Im α.
/// Adds a warning if the grid holds less than 1 - 1e-8 of the probability.
WavefunctionV dilaton_coherent(cdouble alpha, const Grid1D& grid);

}  // namespace radwig
