#pragma once

namespace radwig {

inline constexpr int kDefaultMaxLaguerreDegree = 64;

/// Associated Laguerre value L_n^alpha(x) in two forms. `value` overflows to
/// ±inf for huge arguments; `sign`·exp(`log_abs`) stays usable regardless.
struct LaguerreEval {
  int n = 0;
  double alpha = 0.0;
  double value = 1.0;
  double log_abs = 0.0;
  int sign = 1;  // -1, 0 or +1
};

/// Three-term recurrence
///   k L_k = (2k - 1 + alpha - x) L_{k-1} - (k - 1 + alpha) L_{k-2},
/// with the running pair rescaled whenever it grows past 2^500 so the
/// log-magnitude stays finite for any finite x.
///
/// Throws DegreeOverflowError when n > max_degree and DomainError for
/// x < 0, non-finite x, negative n or alpha.
LaguerreEval laguerre_assoc(int n, double alpha, double x,
                            int max_degree = kDefaultMaxLaguerreDegree);

/// ln(n!) for 0 <= n <= 10^6. Exact summed table below 256, Stirling series above.
double log_factorial(long long n);

}  // namespace radwig
