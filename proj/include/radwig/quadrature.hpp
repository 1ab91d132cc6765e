#pragma once

#include <functional>
#include <span>
#include <vector>

namespace radwig {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  /// Upper bound on the width of the initial subintervals; 0 means one interval.
  double max_initial_width = 0.0;
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // sum of per-interval |Kronrod - Gauss|
  int intervals = 0;
  int evaluations = 0;
};

/// Globally adaptive 10/21-point Gauss–Kronrod integration of f over [a, b].
/// Throws AccuracyError when `max_intervals` is reached before the
/// tolerance max(abs_tol, rel_tol·|I|).
QuadratureResult integrate_gk21(const std::function<double(double)>& f, double a,
                                double b, const QuadratureOptions& opts = {});

/// Vector-valued integrand. For node x the sink adds w_kronrod·f(x) into
/// `kronrod` and, if w_gauss != 0, w_gauss·f(x) into `gauss`.
using VectorIntegrand = std::function<void(double x, double w_kronrod, double w_gauss,
                                           std::span<double> kronrod,
                                           std::span<double> gauss)>;

struct VectorQuadratureResult {
  std::vector<double> value;
  double error = 0.0;  // sum over intervals of max_j |Kronrod_j - Gauss_j|
  int intervals = 0;
  int evaluations = 0;
};

/// Same algorithm for an integrand with `dim` components sharing one
/// partition; the error of an interval is its worst component.
VectorQuadratureResult integrate_gk21_vector(const VectorIntegrand& f, std::size_t dim,
                                             double a, double b,
                                             const QuadratureOptions& opts = {});

}  // namespace radwig
