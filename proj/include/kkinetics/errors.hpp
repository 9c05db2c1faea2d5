#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kkinetics {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (gamma pole, non-positive x, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::ptrdiff_t index = -1)
      : Error(what), index_(index) {}
  /// Series index at which the bad argument appeared, or -1.
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  std::ptrdiff_t index_;
};

/// Result does not fit in a double; carries the natural log of |result|.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double log_value)
      : Error(what), log_value_(log_value) {}
  double log_value() const noexcept { return log_value_; }

 private:
  double log_value_;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Alternating-series cancellation would destroy the result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A caller-side contract was violated (wrong variant, mismatched grid, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Fox-Wright parameters fail the convergence gate.
class RejectedSpecError : public Error {
 public:
  using Error::Error;
};

class InstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace kkinetics
