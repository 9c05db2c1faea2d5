#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>
#include <limits>

#include "kkinetics/errors.hpp"

namespace kkinetics {

/// Truncation policy shared by every infinite series in the library.
///
/// A series stops once `stagnation_window` consecutive terms satisfy
/// |term| <= rel_tol * |partial sum| and the largest term ratio across that
/// window is below one. Running out of `max_terms` first is an error.
struct SeriesControl {
  int max_terms = 500;
  double rel_tol = 1e-15;
  int stagnation_window = 3;

  /// Throws PreconditionError when a field is out of range.
  void validate() const;

  /// Same budget with rel_tol divided by `factor` (used for nested series).
  SeriesControl tightened(double factor = 10.0) const;
};

/// Extended-precision type used for series term logs and accumulation.
using wide_real = long double;

/// A real number stored as sign and natural log of its magnitude.
/// sign == 0 encodes an exact zero.
struct SignedLog {
  int sign = 0;
  wide_real log_abs = -std::numeric_limits<wide_real>::infinity();

  static SignedLog zero() { return {}; }
  static SignedLog from(wide_real x) {
    if (x == 0) return {};
    return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
  }
  wide_real value() const { return sign == 0 ? 0.0L : sign * std::exp(log_abs); }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {sign * o.sign, log_abs + o.log_abs};
  }
  SignedLog operator/(const SignedLog& o) const {
    if (sign == 0) return {};
    return {sign * o.sign, log_abs - o.log_abs};
  }
};

/// x^n as a signed log; 0^0 = 1.
inline SignedLog signed_pow(wide_real x, int n) {
  if (n == 0) return {1, 0.0L};
  if (x == 0) return SignedLog::zero();
  const int sign = (x < 0 && (n % 2 != 0)) ? -1 : 1;
  return {sign, n * std::log(std::fabs(x))};
}

/// Value of a truncated series plus what the truncation rule observed.
struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  /// Bound on the neglected tail, from the geometric term-ratio estimate.
  double tail = 0.0;
  /// Sum of |term| over the terms used; rounding error is O(eps * abs_sum).
  double abs_sum = 0.0;
  /// Largest |term| seen.
  double max_term = 0.0;

  /// tail plus a compensated-summation rounding allowance.
  double error_bound() const {
    return tail + 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  }
};

/// Neumaier-compensated running sum.
template <class T>
class BasicCompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

/// Sums term(n), n = 0, 1, ..., where term returns a SignedLog, under `ctl`.
/// Throws NonConvergenceError when the budget runs out.
template <class TermFn>
SeriesValue sum_log_series(TermFn&& term, const SeriesControl& ctl,
                           const char* name) {
  ctl.validate();
  BasicCompensatedSum<wide_real> acc;
  SeriesValue out;
  std::vector<double> ratios(static_cast<std::size_t>(ctl.stagnation_window));
  double prev_abs = 0.0;
  int small_run = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    const SignedLog t = term(n);
    const wide_real v = t.value();
    if (!std::isfinite(v) || std::fabs(v) > std::numeric_limits<double>::max())
      throw OverflowError(std::string(name) + ": term overflow at n = " +
                              std::to_string(n),
                          static_cast<double>(t.log_abs));
    acc.add(v);
    const double a = static_cast<double>(std::fabs(v));
    out.abs_sum += a;
    if (a > out.max_term) out.max_term = a;
    out.terms = n + 1;

    const double ratio = prev_abs > 0.0 ? a / prev_abs : (a == 0.0 ? 0.0 : 1.0);
    prev_abs = a;
    const double partial = static_cast<double>(std::fabs(acc.value()));
    if (a <= ctl.rel_tol * partial) {
      ratios[static_cast<std::size_t>(small_run % ctl.stagnation_window)] = ratio;
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run < ctl.stagnation_window) continue;
    const double window_ratio = *std::max_element(ratios.begin(), ratios.end());
    if (window_ratio < 1.0) {
      out.value = static_cast<double>(acc.value());
      out.tail = window_ratio > 0.0 ? a * window_ratio / (1.0 - window_ratio) : 0.0;
      return out;
    }
  }
  throw NonConvergenceError(std::string(name) + ": no stagnation within " +
                            std::to_string(ctl.max_terms) + " terms");
}

}  // namespace kkinetics
