#include "kkinetics/specfun.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

namespace kkinetics {

namespace {

// Cancellation guard for alternating Mittag-Leffler sums: the sum of |terms|
// may exceed |result| by at most this factor (about 4 significant digits left).
constexpr double kCancellationLimit = 1e12;

std::string describe(const char* what, double x) {
  std::ostringstream os;
  os.precision(17);
  os << what << " " << x;
  return os.str();
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(describe(name, v) + " must be positive and finite");
}

// Running (x)_{n,k} in log form, advanced one factor per call.
class PochhammerRun {
 public:
  PochhammerRun(double x, double k) : x_(x), k_(k) {}
  /// Value for the current n, then advances to n + 1.
  SignedLog next() {
    const SignedLog out = current_;
    const wide_real factor = x_ + static_cast<wide_real>(n_) * k_;
    ++n_;
    current_ = current_ * SignedLog::from(factor);
    return out;
  }

 private:
  double x_;
  double k_;
  int n_ = 0;
  SignedLog current_{1, 0.0};
};

void guard_cancellation(const SeriesValue& v, double x, const char* name) {
  if (x >= 0.0) return;
  if (v.value == 0.0 ? v.abs_sum > 0.0
                     : v.abs_sum > kCancellationLimit * std::fabs(v.value))
    throw PrecisionError(describe(name, x) +
                         ": alternating-series cancellation exceeds the "
                         "double-precision budget");
}

void guard_ml_argument(const MLParams& p, double x, const char* name) {
  // Beyond this the largest term exp(|x|^{1/alpha}) is not representable.
  if (x < 0.0 && std::log(-x) / p.alpha > std::log(700.0))
    throw PrecisionError(describe(name, x) + ": argument too negative for series evaluation");
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 1)
    throw PreconditionError("SeriesControl: max_terms must be >= 1");
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw PreconditionError("SeriesControl: rel_tol must lie in (0, 1)");
  if (stagnation_window < 1)
    throw PreconditionError("SeriesControl: stagnation_window must be >= 1");
}

SeriesControl SeriesControl::tightened(double factor) const {
  SeriesControl out = *this;
  out.rel_tol = rel_tol / factor;
  return out;
}

void KBesselParams::validate() const {
  check_positive(k, "k");
  check_positive(gamma, "gamma");
  check_positive(lambda, "lambda");
  check_positive(mu, "mu");
  if (!std::isfinite(b) || !std::isfinite(c))
    throw DomainError("b and c must be finite");
  if (!(mu + (b + 1.0) / 2.0 > 0.0))
    throw DomainError(describe("k-gamma argument mu + (b+1)/2 =", mu + (b + 1.0) / 2.0) +
                          " is not positive",
                      0);
}

void MLParams::validate() const {
  check_positive(alpha, "alpha");
  check_positive(beta, "beta");
}

double FoxWrightSpec::convergence_margin() const {
  double margin = 0.0;
  for (const auto& [b, beta] : lower) margin += beta;
  for (const auto& [a, alpha] : upper) margin -= alpha;
  return margin;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError(describe("log_gamma: argument", x) + " must be positive");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

wide_real log_gamma_wide(wide_real x) {
  if (!(x > 0)) throw DomainError(describe("log_gamma: argument", static_cast<double>(x)) +
                                  " must be positive");
  int sign = 0;
  return ::lgammal_r(x, &sign);
}

SignedLog signed_gamma(wide_real x) {
  if (!std::isfinite(x))
    throw DomainError(describe("gamma: argument", static_cast<double>(x)) + " is not finite");
  if (x <= 0 && x == std::floor(x))
    throw DomainError(describe("gamma: pole at", static_cast<double>(x)));
  int sign = 0;
  const wide_real lg = ::lgammal_r(x, &sign);
  return {sign, lg};
}

double log_k_gamma(double x, double k) {
  check_positive(k, "k");
  if (!(x > 0.0)) throw DomainError(describe("k-gamma: argument", x) + " must be positive");
  return (x / k - 1.0) * std::log(k) + log_gamma(x / k);
}

wide_real log_k_gamma_wide(wide_real x, wide_real k) {
  if (!(x > 0))
    throw DomainError(describe("k-gamma: argument", static_cast<double>(x)) + " must be positive");
  return (x / k - 1) * std::log(k) + log_gamma_wide(x / k);
}

SignedLog signed_k_gamma(double x, double k) {
  check_positive(k, "k");
  SignedLog g = signed_gamma(static_cast<wide_real>(x) / k);
  g.log_abs += (static_cast<wide_real>(x) / k - 1) * std::log(static_cast<wide_real>(k));
  return g;
}

double k_gamma(double x, double k) {
  const double lg = log_k_gamma(x, k);
  const double v = std::exp(lg);
  if (!std::isfinite(v)) throw OverflowError(describe("k_gamma overflow, log value", lg), lg);
  return v;
}

SignedLog log_k_pochhammer(double x, int n, double k) {
  if (n < 0) throw DomainError("k_pochhammer: n must be non-negative");
  check_positive(k, "k");
  PochhammerRun run(x, k);
  for (int i = 0; i < n; ++i) run.next();
  return run.next();
}

double k_pochhammer(double x, int n, double k) {
  if (n < 0) throw DomainError("k_pochhammer: n must be non-negative");
  check_positive(k, "k");
  double prod = 1.0;
  for (int i = 0; i < n; ++i) prod *= x + i * k;
  if (!std::isfinite(prod)) {
    const double lg = log_k_pochhammer(x, n, k).log_abs;
    throw OverflowError(describe("k_pochhammer overflow, log value", lg), lg);
  }
  return prod;
}

SeriesValue mittag_leffler(const MLParams& p, double x, const SeriesControl& ctl) {
  p.validate();
  guard_ml_argument(p, x, "mittag_leffler: x =");
  auto term = [&](int n) {
    const SignedLog xn = signed_pow(x, n);
    if (xn.sign == 0) return xn;
    return xn / SignedLog{1, log_gamma_wide(static_cast<wide_real>(p.alpha) * n + p.beta)};
  };
  SeriesValue v = sum_log_series(term, ctl, "mittag_leffler");
  guard_cancellation(v, x, "mittag_leffler: x =");
  return v;
}

SeriesValue scaled_ml(const MLParams& p, double x, const SeriesControl& ctl) {
  p.validate();
  guard_ml_argument(p, x, "scaled_ml: x =");
  const wide_real lg_beta = log_gamma_wide(p.beta);
  auto term = [&](int r) {
    const SignedLog xr = signed_pow(x, r);
    if (xr.sign == 0) return xr;
    if (r == 0) return SignedLog{1, 0.0};
    return xr * SignedLog{1, lg_beta - log_gamma_wide(p.beta + static_cast<wide_real>(p.alpha) * r)};
  };
  SeriesValue v = sum_log_series(term, ctl, "scaled_ml");
  guard_cancellation(v, x, "scaled_ml: x =");
  return v;
}

SeriesValue gen_k_bessel(const KBesselParams& p, double z, const SeriesControl& ctl) {
  p.validate();
  if (!(z >= 0.0) || !std::isfinite(z))
    throw DomainError(describe("gen_k_bessel: z =", z) + " must be non-negative");
  const wide_real shift = (static_cast<wide_real>(p.b) + 1) / 2;
  const wide_real log_half_z = z > 0.0 ? std::log(static_cast<wide_real>(z) / 2) : 0.0L;
  PochhammerRun poch(p.gamma, p.k);
  auto term = [&](int n) -> SignedLog {
    const SignedLog pn = poch.next();
    const wide_real arg = p.mu + static_cast<wide_real>(p.lambda) * n + shift;
    if (!(arg > 0))
      throw DomainError(describe("gen_k_bessel: k-gamma argument", static_cast<double>(arg)) +
                            " is not positive at n = " + std::to_string(n),
                        n);
    if (z == 0.0) return SignedLog::zero();
    const SignedLog cn = signed_pow(-p.c, n);
    if (cn.sign == 0 || pn.sign == 0) return SignedLog::zero();
    const wide_real lg = -log_k_gamma_wide(arg, p.k) - 2 * log_gamma_wide(n + 1.0L) +
                         (p.mu + 2.0L * n) * log_half_z;
    return cn * pn * SignedLog{1, lg};
  };
  return sum_log_series(term, ctl, "gen_k_bessel");
}

SeriesValue k_bessel_j(double k, double gamma, double lambda, double nu, double w,
                       const SeriesControl& ctl) {
  check_positive(k, "k");
  check_positive(gamma, "gamma");
  check_positive(lambda, "lambda");
  check_positive(nu, "nu");
  PochhammerRun poch(gamma, k);
  auto term = [&](int n) -> SignedLog {
    const SignedLog pn = poch.next();
    const SignedLog wn = signed_pow(-static_cast<wide_real>(w) / 2, n);
    if (wn.sign == 0 || pn.sign == 0) return SignedLog::zero();
    const wide_real lg = -log_k_gamma_wide(static_cast<wide_real>(lambda) * n + nu + 1, k) -
                         2 * log_gamma_wide(n + 1.0L);
    return pn * wn * SignedLog{1, lg};
  };
  return sum_log_series(term, ctl, "k_bessel_j");
}

SeriesValue k_wright_w(double k, double gamma, double lambda, double mu, double x,
                       const SeriesControl& ctl) {
  check_positive(k, "k");
  check_positive(gamma, "gamma");
  check_positive(lambda, "lambda");
  check_positive(mu, "mu");
  PochhammerRun poch(gamma, k);
  auto term = [&](int n) -> SignedLog {
    const SignedLog pn = poch.next();
    const SignedLog xn = signed_pow(static_cast<wide_real>(x) / 2, n);
    if (xn.sign == 0 || pn.sign == 0) return SignedLog::zero();
    const wide_real lg = -log_k_gamma_wide(static_cast<wide_real>(lambda) * n + mu, k) -
                         2 * log_gamma_wide(n + 1.0L);
    return pn * xn * SignedLog{1, lg};
  };
  return sum_log_series(term, ctl, "k_wright_w");
}

SeriesValue fox_wright(const FoxWrightSpec& spec, double z, const SeriesControl& ctl) {
  for (const auto& [a, alpha] : spec.upper)
    if (!std::isfinite(a) || !std::isfinite(alpha))
      throw RejectedSpecError("fox_wright: non-finite numerator parameter");
  for (const auto& [b, beta] : spec.lower)
    if (!std::isfinite(b) || !std::isfinite(beta))
      throw RejectedSpecError("fox_wright: non-finite denominator parameter");

  const double margin = spec.convergence_margin();
  constexpr double kMarginEps = 1e-12;
  if (margin < -1.0 - kMarginEps) {
    throw RejectedSpecError(describe("fox_wright: sum(beta) - sum(alpha) =", margin) +
                            " violates the convergence condition (> -1)");
  }
  if (margin <= -1.0 + kMarginEps) {
    // Boundary case: finite radius rho = prod |alpha|^-alpha prod |beta|^beta.
    double log_rho = 0.0;
    for (const auto& [a, alpha] : spec.upper)
      if (alpha != 0.0) log_rho -= alpha * std::log(std::fabs(alpha));
    for (const auto& [b, beta] : spec.lower)
      if (beta != 0.0) log_rho += beta * std::log(std::fabs(beta));
    if (!(z == 0.0 || std::log(std::fabs(z)) < log_rho))
      throw RejectedSpecError(
          describe("fox_wright: sum(beta) - sum(alpha) = -1 and |z| =", std::fabs(z)) +
          " is outside the radius of convergence");
  }

  auto term = [&](int n) -> SignedLog {
    SignedLog t = signed_pow(z, n);
    for (const auto& [a, alpha] : spec.upper) {
      const wide_real arg = a + static_cast<wide_real>(alpha) * n;
      if (arg <= 0 && arg == std::floor(arg))
        throw DomainError(describe("fox_wright: numerator gamma pole at", static_cast<double>(arg)) +
                              ", n = " + std::to_string(n),
                          n);
      t = t * signed_gamma(arg);
    }
    for (const auto& [b, beta] : spec.lower) {
      const wide_real arg = b + static_cast<wide_real>(beta) * n;
      if (arg <= 0 && arg == std::floor(arg))
        throw DomainError(describe("fox_wright: denominator gamma pole at", static_cast<double>(arg)) +
                              ", n = " + std::to_string(n),
                          n);
      t = t / signed_gamma(arg);
    }
    return t / SignedLog{1, log_gamma_wide(n + 1.0L)};
  };
  return sum_log_series(term, ctl, "fox_wright");
}

}  // namespace kkinetics
