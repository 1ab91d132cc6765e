#pragma once

#include <optional>
#include <string>
#include <vector>

namespace radwig {

struct InvariantResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // non-empty when the measurement itself threw
};

struct CheckOptions {
  std::optional<std::string> only;
  std::optional<double> tolerance;  // replaces every default tolerance
  int threads = 0;
};

/// Names in run order.
std::vector<std::string> invariant_names();

/// pass ⇔ measured <= tolerance (each measure is oriented that way).
/// Throws InputError when `only` names no invariant.
std::vector<InvariantResult> run_invariants(const CheckOptions& opts = {});

}  // namespace radwig
