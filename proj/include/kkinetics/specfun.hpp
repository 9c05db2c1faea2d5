#pragma once

#include <utility>
#include <vector>

#include "kkinetics/series.hpp"

namespace kkinetics {

/// Parameters (k, gamma, lambda, mu, b, c) of the generalized k-Bessel
/// function omega. `mu` is the series order.
struct KBesselParams {
  double k = 1.0;
  double gamma = 1.0;
  double lambda = 1.0;
  double mu = 1.0;
  double b = 1.0;
  double c = 1.0;

  /// Throws DomainError unless k, gamma, lambda, mu > 0 and the leading
  /// k-gamma argument mu + (b+1)/2 is positive.
  void validate() const;
};

/// Indices of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  void validate() const;
};

/// Fox-Wright pPsiq parameters: numerator pairs (a_i, alpha_i) and
/// denominator pairs (b_j, beta_j).
struct FoxWrightSpec {
  std::vector<std::pair<double, double>> upper;
  std::vector<std::pair<double, double>> lower;

  /// sum(beta_j) - sum(alpha_i); the series converges for every z when > -1.
  double convergence_margin() const;
};

// --- gamma family ---------------------------------------------------------

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Extended-precision ln Gamma(x), x > 0; used for series terms.
wide_real log_gamma_wide(wide_real x);

/// ln|Gamma(x)| with the sign of Gamma(x); throws DomainError at poles.
SignedLog signed_gamma(wide_real x);

/// ln Gamma_k(x) = (x/k - 1) ln k + ln Gamma(x/k), x > 0.
double log_k_gamma(double x, double k);

/// Extended-precision ln Gamma_k(x), x > 0.
wide_real log_k_gamma_wide(wide_real x, wide_real k);

/// Gamma_k(x) as a signed log; x may be negative away from the poles
/// x = -m k.
SignedLog signed_k_gamma(double x, double k);

/// Gamma_k(x) = k^{x/k-1} Gamma(x/k). Throws OverflowError with the log value
/// if the result is not representable.
double k_gamma(double x, double k);

/// (x)_{n,k} = x (x+k) ... (x+(n-1)k), as a signed log.
SignedLog log_k_pochhammer(double x, int n, double k);

/// (x)_{n,k} by the product form.
double k_pochhammer(double x, int n, double k);

// --- series functions -----------------------------------------------------

/// E_{alpha,beta}(x) = sum x^n / Gamma(alpha n + beta).
SeriesValue mittag_leffler(const MLParams& p, double x,
                           const SeriesControl& ctl = {});

/// Gamma(beta) E_{alpha,beta}(x) summed as sum exp(lnG(beta) - lnG(beta+alpha r)) x^r,
/// finite even when Gamma(beta) alone overflows.
SeriesValue scaled_ml(const MLParams& p, double x, const SeriesControl& ctl = {});

/// Generalized k-Bessel function
///   omega(z) = sum (-1)^n c^n (gamma)_{n,k} / [Gamma_k(mu + lambda n + (b+1)/2) (n!)^2]
///              * (z/2)^{mu+2n},   z >= 0.
SeriesValue gen_k_bessel(const KBesselParams& p, double z,
                         const SeriesControl& ctl = {});

/// k-Bessel function of the first kind
///   J(w) = sum (gamma)_{n,k} / Gamma_k(lambda n + nu + 1) (-1)^n (w/2)^n / (n!)^2.
/// The numerator uses gamma; this is the form for which
/// omega_{b=c=1}(z) = (z/2)^mu J(z^2/2).
SeriesValue k_bessel_j(double k, double gamma, double lambda, double nu,
                       double w, const SeriesControl& ctl = {});

/// k-Wright function
///   W(x) = sum (gamma)_{n,k} / Gamma_k(lambda n + mu) (x/2)^n / (n!)^2,
/// scaled like J so that omega_{b=-1,c=1}(z) = (z/2)^mu W(-z^2/2).
SeriesValue k_wright_w(double k, double gamma, double lambda, double mu,
                       double x, const SeriesControl& ctl = {});

/// Fox-Wright function pPsiq(z) = sum prod Gamma(a_i + alpha_i n) /
/// prod Gamma(b_j + beta_j n) z^n / n!.
SeriesValue fox_wright(const FoxWrightSpec& spec, double z,
                       const SeriesControl& ctl = {});

}  // namespace kkinetics
