#pragma once

#include <stdexcept>
#include <string>

namespace radwig {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (r <= 0, x < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegreeOverflowError : public Error {
 public:
  using Error::Error;
};

/// Bad user-supplied data: malformed files, invalid grids, failed validation.
/// The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Sample grids that do not line up (Wigner gathering, overlaps on
/// different grids).
class AlignmentError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class BasisMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedOrderError : public InputError {
 public:
  using InputError::InputError;
};

/// Probability mass left the sampled window.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double lost_mass)
      : Error(what), lost_mass_(lost_mass) {}
  double lost_mass() const noexcept { return lost_mass_; }

 private:
  double lost_mass_;
};

/// Adaptive refinement gave up before reaching the requested tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace radwig
