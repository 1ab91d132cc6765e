#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "radwig/grid.hpp"
#include "radwig/states.hpp"
#include "radwig/wigner.hpp"

namespace radwig {

inline constexpr int kMaxFockCutoff = 40;

/// ⟨n_x,n_y|ρ|n_x′,n_y′⟩ with 0 <= n_x, n_y <= n_max.
class FockDensityMatrix {
 public:
  /// `entries` is indexed by index(nx, ny). Validates Hermiticity (worst
  /// pair named in the ValidationError), trace 1 ± 1e-10 and PSD to -1e-8.
  FockDensityMatrix(int n_max, Eigen::MatrixXcd entries);

  /// {"n_max": N, "entries": [{"nx","ny","nxp","nyp","re","im"}, ...]};
  /// omitted entries are zero. Schema errors name the entry and field.
  static FockDensityMatrix from_json(std::string_view text);
  std::string to_json() const;

  static FockDensityMatrix pure(int n_max, const Eigen::VectorXcd& amplitudes);

  int n_max() const noexcept { return n_max_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>((n_max_ + 1) * (n_max_ + 1)); }
  std::size_t index(int nx, int ny) const noexcept {
    return static_cast<std::size_t>(nx * (n_max_ + 1) + ny);
  }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  double trace() const { return entries_.trace().real(); }

 private:
  int n_max_;
  Eigen::MatrixXcd entries_;
};

/// ⟨n_+,n_-|n_x,n_y⟩ on the sector n_x + n_y = N. Rows are n_+ = 0..N,
/// columns n_x = 0..N (n_y = N - n_x).
Eigen::MatrixXcd fock_to_schwinger_block(int total);

/// C_{lm;l′m′} stored per pair of total-number sectors (N, N′); block
/// entry (j, j′) couples |n_+ = j, n_- = N-j⟩ with |n_+ = j′, n_- = N′-j′⟩.
class SchwingerDensityMatrix {
 public:
  using Blocks = std::map<std::pair<int, int>, Eigen::MatrixXcd>;

  SchwingerDensityMatrix(int max_total, Blocks blocks);

  int max_total() const noexcept { return max_total_; }
  const Blocks& blocks() const noexcept { return blocks_; }

  /// C_{lm;l′m′}; zero for absent blocks.
  cdouble entry(const SchwingerLabel& a, const SchwingerLabel& b) const;
  double trace() const;
  double hermiticity_error() const;

 private:
  int max_total_;
  Blocks blocks_;
};

/// Throws InputError when n_max exceeds kMaxFockCutoff.
SchwingerDensityMatrix fock_to_schwinger(const FockDensityMatrix& rho);

/// ρ_v(v̄,v̄′) = Σ_m Σ_{l,l′} C_{lm;l′m} u_{lm}(v̄) u_{l′m}(v̄′), u_{lm} = e^{v̄}R_{l,m}(e^{v̄}).
/// A trace change above 1e-8 is reported in the result's warnings.
DensityMatrixV radial_reduce(const SchwingerDensityMatrix& rho_s, const Grid1D& grid);

struct PipelineGrids {
  Grid1D vbar = default_vbar_grid();
  Grid1D gamma{-3.0, 2.0, 251};
  Grid1D delta{-4.0, 4.0, 321};
};

WignerGrid end_to_end(const FockDensityMatrix& rho, const PipelineGrids& grids,
                      const WignerOptions& opts = {});

}  // namespace radwig
