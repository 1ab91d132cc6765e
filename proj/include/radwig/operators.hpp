#pragma once

#include <complex>

#include "radwig/states.hpp"

namespace radwig {

enum class OperatorKind {
  PD,            // Dirac radial momentum, r basis only
  Pr,            // dilation momentum
  V,             // v̂ = ln r̂
  R,             // r̂ (= e^{v̂} in the v̄ basis)
  Displacement,  // D(λ, μ) = e^{iμP̂^r/2} r̂^{iλ} e^{iμP̂^r/2}
};

enum class Representation { FiniteDifference, Spectral };

struct OperatorAction {
  OperatorKind kind = OperatorKind::V;
  double lambda = 0.0;
  double mu = 0.0;
  Representation representation = Representation::Spectral;
};

/// Samples within this of zero at both edges count as decayed; anything
/// larger makes periodic spectral operations report wraparound.
inline constexpr double kEdgeDecay = 1e-10;

// --- r basis (finite differences, 4th order, one-sided at the edges) --------

/// ⟨r|P̂^D|ψ⟩ = -i(∂_r + 1/(2r))ψ(r). Needs at least 5 samples.
WavefunctionR apply_pd(const WavefunctionR& psi);

/// ⟨r|P̂^r|ψ⟩ = -i(r∂_r + 1)ψ(r).
WavefunctionR apply_pr(const WavefunctionR& psi);

/// r·ψ(r)
WavefunctionR apply_r(const WavefunctionR& psi);

// --- v̄ basis -----------------------------------------------------------------

/// -i∂_v̄ψ, spectral by default. Adds a wraparound warning when ψ has not
/// decayed below kEdgeDecay at the grid edges.
WavefunctionV apply_pr(const WavefunctionV& psi,
                       Representation rep = Representation::Spectral);

WavefunctionV apply_v(const WavefunctionV& psi);
/// r̂ = e^{v̂}
WavefunctionV apply_r(const WavefunctionV& psi);
/// â = (v̂ + iP̂^r)/√2
WavefunctionV apply_annihilation(const WavefunctionV& psi);

/// ψ(v̄) -> ψ(v̄ + shift) by exact spectral phase; e^{iςP̂^r} is translate(ψ, ς).
WavefunctionV translate(const WavefunctionV& psi, double shift);

/// (Dψ)(v̄) = e^{iλ(v̄ + μ/2)} ψ(v̄ + μ), applied as half-step translation,
/// phase e^{iλv̄}, half-step translation. Throws TruncationError when the
/// mass shifted across the grid edge exceeds `max_lost_mass`.
WavefunctionV apply_displacement(double lambda, double mu, const WavefunctionV& psi,
                                 double max_lost_mass = 1e-8);

/// D†(λ, μ) = D(-λ, -μ)
WavefunctionV apply_displacement_adjoint(double lambda, double mu, const WavefunctionV& psi,
                                         double max_lost_mass = 1e-8);

/// Mass of |ψ|² that a translation by `shift` would push across a grid edge.
double translation_lost_mass(const WavefunctionV& psi, double shift);

/// ψ̃(P) = (2π)^{-1/2} ∫ e^{-iPv̄} ψ(v̄) dv̄ on `p_grid` (trapezoid, direct sum).
WavefunctionV momentum_transform(const WavefunctionV& psi, const Grid1D& p_grid);

/// ⟨a|b⟩ by trapezoid quadrature; grids must match.
cdouble inner_product(const WavefunctionV& a, const WavefunctionV& b);
cdouble inner_product(const WavefunctionR& a, const WavefunctionR& b);

/// ⟨ψ|Ô|ψ⟩. For the Hermitian kinds (Pr, V, R) an imaginary part above
/// `hermitian_tol` (relative to max(1, |value|)) throws ValidationError.
/// PD in the v̄ basis throws BasisMismatchError.
cdouble expectation(const OperatorAction& op, const WavefunctionV& psi,
                    double hermitian_tol = 1e-9);
cdouble expectation(const OperatorAction& op, const WavefunctionR& psi,
                    double hermitian_tol = 1e-9);

/// Smeared form of Tr[D(λ,μ) D†(λ',μ')]: ∬ dλ' dμ' |⟨g|D(λ,μ)D†(λ',μ')|g⟩|² / 2π
/// for a Gaussian packet g of the given width in v̄. A δ(λ-λ')δ(μ-μ')
/// kernel with weight w·2π gives w; the trace in the δ-normalized v̄ basis
/// has w = 1 for every μ.
double displacement_trace_weight(double lambda, double mu, double packet_width);

}  // namespace radwig
