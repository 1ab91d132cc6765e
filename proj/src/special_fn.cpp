#include "radwig/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radwig/error.hpp"

namespace radwig {

namespace {

constexpr int kTableSize = 256;

const std::array<double, kTableSize>& log_factorial_table() {
  static const std::array<double, kTableSize> table = [] {
    std::array<double, kTableSize> t{};
    t[0] = 0.0;
    for (int k = 1; k < kTableSize; ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
    return t;
  }();
  return table;
}

}  // namespace

LaguerreEval laguerre_assoc(int n, double alpha, double x, int max_degree) {
  if (n < 0) throw DomainError("Laguerre degree must be nonnegative");
  if (n > max_degree) {
    throw DegreeOverflowError("Laguerre degree " + std::to_string(n) +
                              " exceeds the configured maximum " +
                              std::to_string(max_degree));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("Laguerre order alpha must be finite and >= 0");
  }
  if (!std::isfinite(x)) throw DomainError("Laguerre argument must be finite");
  if (x < 0.0) throw DomainError("Laguerre argument must be >= 0");

  LaguerreEval out;
  out.n = n;
  out.alpha = alpha;
  if (n == 0) return out;  // exactly 1

  double prev = 1.0;              // L_0
  double cur = 1.0 + alpha - x;   // L_1
  // pair kept at magnitude <= 1 by exact power-of-two rescaling, so one
  // step can grow it by at most ~x without overflowing
  long long exponent = 0;
  for (int k = 2; k <= n; ++k) {
    const double big = std::max(std::abs(cur), std::abs(prev));
    if (big > 1.0) {
      const int e = std::ilogb(big) + 1;
      cur = std::ldexp(cur, -e);
      prev = std::ldexp(prev, -e);
      exponent += e;
    }
    const double next = ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k;
    prev = cur;
    cur = next;
  }

  if (cur == 0.0) {
    out.sign = 0;
    out.value = 0.0;
    out.log_abs = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.sign = cur > 0.0 ? 1 : -1;
  out.log_abs = std::log(std::abs(cur)) + static_cast<double>(exponent) * std::numbers::ln2;
  out.value = exponent > 4096 ? out.sign * std::numeric_limits<double>::infinity()
                              : std::ldexp(cur, static_cast<int>(exponent));
  return out;
}

double log_factorial(long long n) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  if (n < kTableSize) return log_factorial_table()[static_cast<std::size_t>(n)];
  // ln n! = (n + 1/2) ln(n+1) - (n+1) + ln(2π)/2 + 1/(12m) - 1/(360m³) + 1/(1260m⁵), m = n+1
  const double m = static_cast<double>(n) + 1.0;
  const double inv = 1.0 / m;
  const double inv2 = inv * inv;
  return (m - 0.5) * std::log(m) - m + 0.5 * std::log(2.0 * std::numbers::pi) +
         inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0));
}

}  // namespace radwig
