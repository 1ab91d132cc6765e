#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace radwig {

/// Uniform sample axis. Used for v̄ (log radius), the Wigner axes γ and δ,
/// and the dilation-momentum axis.
///
/// A single-point axis (min == max, one sample) is accepted so that the CLI
/// can evaluate one phase-space cell; every other axis is strictly
/// increasing with at least two samples.
class Grid1D {
 public:
  Grid1D(double min, double max, std::size_t n_points);

  /// Grid with the given spacing anchored at `min`; `n_points` samples.
  static Grid1D with_spacing(double min, double spacing, std::size_t n_points);

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return spacing_; }
  bool degenerate() const noexcept { return n_ == 1; }

  /// Sample i; the last sample is exactly max().
  double operator[](std::size_t i) const noexcept {
    return i + 1 == n_ ? max_ : min_ + static_cast<double>(i) * spacing_;
  }
  std::vector<double> values() const;

  /// Index of the sample equal to x within `tol` (relative to spacing).
  std::optional<std::size_t> index_of(double x, double tol = 1e-9) const;

  bool operator==(const Grid1D& other) const noexcept {
    return n_ == other.n_ && min_ == other.min_ && max_ == other.max_;
  }

 private:
  double min_;
  double max_;
  std::size_t n_;
  double spacing_;
};

/// Trapezoid weights for a uniform grid (all zero for a degenerate axis).
std::vector<double> trapezoid_weights(const Grid1D& grid);

}  // namespace radwig
