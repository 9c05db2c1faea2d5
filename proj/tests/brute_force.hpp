#pragma once

// Naive long-double partial sums used as independent oracles. Nothing here
// calls into the library: products are formed directly and gamma values come
// from tgammal/lgammal.

#include <cmath>

namespace brute {

using real = long double;

inline real poch(real x, int n, real k) {
  real p = 1;
  for (int i = 0; i < n; ++i) p *= x + i * k;
  return p;
}

inline real kgamma(real x, real k) { return std::pow(k, x / k - 1) * std::tgamma(x / k); }

inline real factorial(int n) {
  real f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// sum_{n<terms} x^n / Gamma(alpha n + beta)
inline real ml(real alpha, real beta, real x, int terms = 200) {
  real s = 0, xn = 1;
  for (int n = 0; n < terms; ++n) {
    s += xn / std::tgamma(alpha * n + beta);
    xn *= x;
  }
  return s;
}

/// sum_{r<terms} Gamma(beta)/Gamma(beta + alpha r) x^r
inline real scaled_ml(real alpha, real beta, real x, int terms = 200) {
  real s = 0, xr = 1;
  for (int r = 0; r < terms; ++r) {
    s += std::exp(std::lgamma(beta) - std::lgamma(beta + alpha * r)) * xr;
    xr *= x;
  }
  return s;
}

/// omega(z) partial sum
inline real omega(real k, real g, real lambda, real mu, real b, real c, real z, int terms = 60) {
  real s = 0;
  for (int n = 0; n < terms; ++n) {
    const real t = std::pow(-c, static_cast<real>(n)) * poch(g, n, k) /
                   (kgamma(mu + lambda * n + (b + 1) / 2, k) * factorial(n) * factorial(n)) *
                   std::pow(z / 2, mu + 2 * n);
    s += t;
  }
  return s;
}

/// Gauss 2F1(a, b; c; z) partial sum
inline real hyp2f1(real a, real b, real c, real z, int terms = 400) {
  real s = 0, t = 1;
  for (int n = 0; n < terms; ++n) {
    s += t;
    t *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
  }
  return s;
}

/// Theorem-1 style solution written from the b = c = 1 corollary:
/// N0 sum (-1)^n (g)_{n,k} / Gamma_k(mu + lambda n + 1) Gamma(mu+2n+1)/(n!)^2
///    (t/2)^{mu+2n} E_{nu, mu+2n+1}(-d^nu t^nu)
inline real corollary1(real n0, real d, real nu, real k, real g, real lambda, real mu, real t,
                       int terms = 40) {
  real s = 0;
  const real x = -std::pow(d, nu) * std::pow(t, nu);
  for (int n = 0; n < terms; ++n) {
    const real beta = mu + 2 * n + 1;
    s += std::pow(-1.0L, static_cast<real>(n)) * poch(g, n, k) / kgamma(mu + lambda * n + 1, k) /
         (factorial(n) * factorial(n)) * std::pow(t / 2, mu + 2 * n) * scaled_ml(nu, beta, x);
  }
  return n0 * s;
}

/// General series solution with source argument z and Mittag-Leffler
/// parameter beta_n = mu + 2n + 1 (power_nu false) or nu (mu + 2n) + 1.
inline real theorem_solution(real n0, real rate, real nu, real k, real g, real lambda, real mu,
                             real b, real c, real z, bool power_nu, real t, int terms = 40) {
  real s = 0;
  const real x = -std::pow(rate, nu) * std::pow(t, nu);
  for (int n = 0; n < terms; ++n) {
    const real order = mu + 2 * n;
    const real beta = power_nu ? nu * order + 1 : order + 1;
    s += std::pow(-c, static_cast<real>(n)) * poch(g, n, k) /
         kgamma(mu + lambda * n + (b + 1) / 2, k) / (factorial(n) * factorial(n)) *
         std::pow(z / 2, order) * scaled_ml(nu, beta, x);
  }
  return n0 * s;
}

}  // namespace brute
