#include "radwig/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

#include "radwig/error.hpp"

namespace radwig {

namespace {

// 21-point Kronrod abscissae (positive half, descending) and weights; the
// odd-indexed abscissae are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

// Gauss weight of Kronrod node k (k = 0..10), zero for Kronrod-only nodes.
constexpr double gauss_weight(std::size_t k) {
  return (k % 2 == 1) ? kWg[k / 2] : 0.0;
}

struct Interval {
  double a;
  double b;
  double kronrod;
  double error;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie break
  }
};

Interval gk21(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double k_sum = 0.0;
  double g_sum = 0.0;
  for (std::size_t k = 0; k < kXgk.size(); ++k) {
    const double dx = half * kXgk[k];
    const double fv = (k + 1 == kXgk.size()) ? f(center) : f(center - dx) + f(center + dx);
    k_sum += kWgk[k] * fv;
    g_sum += gauss_weight(k) * fv;
  }
  return {a, b, k_sum * half, std::abs((k_sum - g_sum) * half)};
}

int initial_pieces(double a, double b, double max_width) {
  if (max_width <= 0.0) return 1;
  return std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
}

}  // namespace

QuadratureResult integrate_gk21(const std::function<double(double)>& f, double a,
                                double b, const QuadratureOptions& opts) {
  QuadratureResult result;
  if (a == b) return result;
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  const int pieces = initial_pieces(a, b, opts.max_initial_width);
  const double width = (b - a) / pieces;
  double total = 0.0;
  double error = 0.0;
  for (int p = 0; p < pieces; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == pieces) ? b : a + (p + 1) * width;
    Interval iv = gk21(f, lo, hi);
    total += iv.kronrod;
    error += iv.error;
    heap.push(iv);
  }
  int count = pieces;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (count >= opts.max_intervals) {
      std::ostringstream os;
      os << "adaptive quadrature did not converge after " << count
         << " intervals (residual estimate " << error << ")";
      throw AccuracyError(os.str(), error);
    }
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Interval left = gk21(f, worst.a, mid);
    Interval right = gk21(f, mid, worst.b);
    total += left.kronrod + right.kronrod - worst.kronrod;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Re-sum in position order so the value does not depend on refinement history.
  std::vector<Interval> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  double sum = 0.0;
  double err = 0.0;
  for (const auto& iv : all) {
    sum += iv.kronrod;
    err += iv.error;
  }
  result.value = sign * sum;
  result.error = err;
  result.intervals = static_cast<int>(all.size());
  result.evaluations = result.intervals * 21;
  return result;
}

namespace {

struct VectorInterval {
  double a;
  double b;
  double error;
  std::size_t slot;  // row in the interval value store
};

struct VectorByError {
  bool operator()(const VectorInterval& x, const VectorInterval& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

}  // namespace

VectorQuadratureResult integrate_gk21_vector(const VectorIntegrand& f, std::size_t dim,
                                             double a, double b,
                                             const QuadratureOptions& opts) {
  VectorQuadratureResult result;
  result.value.assign(dim, 0.0);
  if (a == b || dim == 0) return result;
  if (b < a) throw DomainError("integrate_gk21_vector needs a <= b");

  std::vector<double> store;  // Kronrod values per slot, dim entries each
  std::vector<std::size_t> free_slots;
  std::vector<double> gauss(dim);

  auto evaluate = [&](double lo, double hi) {
    std::size_t slot;
    if (!free_slots.empty()) {
      slot = free_slots.back();
      free_slots.pop_back();
    } else {
      slot = store.size() / dim;
      store.resize(store.size() + dim);
    }
    std::span<double> kron(store.data() + slot * dim, dim);
    std::fill(kron.begin(), kron.end(), 0.0);
    std::fill(gauss.begin(), gauss.end(), 0.0);
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < kXgk.size(); ++k) {
      const double wk = kWgk[k] * half;
      const double wg = gauss_weight(k) * half;
      if (k + 1 == kXgk.size()) {
        f(center, wk, wg, kron, gauss);
      } else {
        const double dx = half * kXgk[k];
        f(center - dx, wk, wg, kron, gauss);
        f(center + dx, wk, wg, kron, gauss);
      }
    }
    double err = 0.0;
    for (std::size_t j = 0; j < dim; ++j) err = std::max(err, std::abs(kron[j] - gauss[j]));
    result.evaluations += 21;
    return VectorInterval{lo, hi, err, slot};
  };

  auto inf_norm = [&](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };

  std::priority_queue<VectorInterval, std::vector<VectorInterval>, VectorByError> heap;
  std::vector<double> total(dim, 0.0);
  double error = 0.0;
  const int pieces = initial_pieces(a, b, opts.max_initial_width);
  const double width = (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == pieces) ? b : a + (p + 1) * width;
    VectorInterval iv = evaluate(lo, hi);
    const double* kv = store.data() + iv.slot * dim;
    for (std::size_t j = 0; j < dim; ++j) total[j] += kv[j];
    error += iv.error;
    heap.push(iv);
  }
  int count = pieces;
  while (error > std::max(opts.abs_tol, opts.rel_tol * inf_norm(total))) {
    if (count >= opts.max_intervals) {
      std::ostringstream os;
      os << "adaptive quadrature did not converge after " << count
         << " intervals (residual estimate " << error << ")";
      throw AccuracyError(os.str(), error);
    }
    VectorInterval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    VectorInterval left = evaluate(worst.a, mid);
    VectorInterval right = evaluate(mid, worst.b);
    const double* kw = store.data() + worst.slot * dim;
    const double* kl = store.data() + left.slot * dim;
    const double* kr = store.data() + right.slot * dim;
    for (std::size_t j = 0; j < dim; ++j) total[j] += kl[j] + kr[j] - kw[j];
    error += left.error + right.error - worst.error;
    free_slots.push_back(worst.slot);
    heap.push(left);
    heap.push(right);
    ++count;
  }

  std::vector<VectorInterval> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const VectorInterval& x, const VectorInterval& y) { return x.a < y.a; });
  double err = 0.0;
  for (const auto& iv : all) {
    const double* kv = store.data() + iv.slot * dim;
    for (std::size_t j = 0; j < dim; ++j) result.value[j] += kv[j];
    err += iv.error;
  }
  result.error = err;
  result.intervals = static_cast<int>(all.size());
  return result;
}

}  // namespace radwig
