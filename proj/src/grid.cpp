#include "radwig/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radwig/error.hpp"

namespace radwig {

Grid1D::Grid1D(double min, double max, std::size_t n_points)
    : min_(min), max_(max), n_(n_points), spacing_(0.0) {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw InputError("grid bounds must be finite");
  }
  if (n_points == 1) {
    if (min != max) {
      throw InputError("a single-point grid needs min == max");
    }
    return;
  }
  if (n_points < 2 || !(max > min)) {
    std::ostringstream os;
    os << "grid needs max > min and at least 2 points (got " << min << ":"
       << max << ":" << n_points << ")";
    throw InputError(os.str());
  }
  spacing_ = (max - min) / static_cast<double>(n_points - 1);
}

Grid1D Grid1D::with_spacing(double min, double spacing, std::size_t n_points) {
  return Grid1D(min, min + spacing * static_cast<double>(n_points - 1), n_points);
}

std::vector<double> Grid1D::values() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
  return out;
}

std::optional<std::size_t> Grid1D::index_of(double x, double tol) const {
  if (n_ == 1) {
    if (std::abs(x - min_) <= tol * std::max(1.0, std::abs(min_))) return 0;
    return std::nullopt;
  }
  const double pos = (x - min_) / spacing_;
  const double nearest = std::round(pos);
  if (nearest < 0 || nearest > static_cast<double>(n_ - 1)) return std::nullopt;
  if (std::abs(pos - nearest) > tol) return std::nullopt;
  return static_cast<std::size_t>(nearest);
}

std::vector<double> trapezoid_weights(const Grid1D& grid) {
  std::vector<double> w(grid.size(), grid.spacing());
  if (grid.size() >= 2) {
    w.front() *= 0.5;
    w.back() *= 0.5;
  } else {
    w.assign(grid.size(), 0.0);
  }
  return w;
}

}  // namespace radwig
