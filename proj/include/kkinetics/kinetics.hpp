#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "kkinetics/specfun.hpp"

namespace kkinetics {

/// Which closed-form solution applies.
///  Theorem1: N(t) - N0 omega(t)           = -d^nu  I^nu N(t)
///  Theorem2: N(t) - N0 omega(d^nu t^nu)   = -d^nu  I^nu N(t)
///  Theorem3: N(t) - N0 omega(d^nu t^nu)   = -a^nu  I^nu N(t),  a != d
/// where I^nu is the Riemann-Liouville fractional integral of order nu.
enum class Variant { Theorem1 = 1, Theorem2 = 2, Theorem3 = 3 };

std::string_view to_string(Variant v);

/// One fractional kinetic equation instance. `mu` (the omega order) lives in
/// params; `nu` is the order of the fractional integral.
struct KineticProblem {
  double n0 = 1.0;
  double d = 1.0;
  double a = 1.0;
  double nu = 1.0;
  Variant variant = Variant::Theorem1;
  KBesselParams params;
  /// Set only by theorem3_coincidence_harness; permits a == d for Theorem3.
  bool coincidence_harness = false;

  /// Throws DomainError on invalid fields, including a == d for Theorem3
  /// outside the coincidence harness.
  void validate() const;

  /// Rate constant multiplying the fractional integral: d, or a for Theorem3.
  double rate() const { return variant == Variant::Theorem3 ? a : d; }

  /// Argument at which the source omega is evaluated: t or d^nu t^nu.
  double source_argument(double t) const;
};

/// Theorem3 problem with a == d, bypassing the a != d check. Only for
/// comparing Theorem3 output with Theorem2.
KineticProblem theorem3_coincidence_harness(KineticProblem theorem2);

/// Solution value at one time plus outer-series bookkeeping.
struct PointSolution {
  double value = 0.0;
  int terms = 0;
  /// Outer truncation bound plus the largest inner (Mittag-Leffler) bound
  /// propagated through the outer coefficients.
  double tail = 0.0;
};

struct SolutionTable {
  KineticProblem problem;
  std::vector<double> times;
  std::vector<double> values;
  std::vector<int> terms;
  std::vector<double> tails;

  std::size_t size() const { return times.size(); }
  double max_tail() const;
};

PointSolution solve_theorem1(const KineticProblem& prob, double t,
                             const SeriesControl& ctl = {});
PointSolution solve_theorem2(const KineticProblem& prob, double t,
                             const SeriesControl& ctl = {});
PointSolution solve_theorem3(const KineticProblem& prob, double t,
                             const SeriesControl& ctl = {});

/// Dispatches on prob.variant.
PointSolution solve_point(const KineticProblem& prob, double t,
                          const SeriesControl& ctl = {});

/// Evaluates the solution on a strictly increasing grid of t >= 0. Points are
/// computed in parallel (OpenMP) and stored by grid index, so the result is
/// identical to solve_grid_serial. A failure at any point throws; no partial
/// table is returned.
SolutionTable solve_grid(const KineticProblem& prob, std::span<const double> grid,
                         const SeriesControl& ctl = {});

/// Single-threaded reference for solve_grid.
SolutionTable solve_grid_serial(const KineticProblem& prob,
                                std::span<const double> grid,
                                const SeriesControl& ctl = {});

/// n_points uniformly spaced times on [0, t_end], endpoints included.
std::vector<double> uniform_grid(double t_end, int n_points);

enum class Reduction { BesselJ, WrightW };

/// Reduced source forms: (z/2)^mu J(z^2/2) for b = c = 1 and
/// (z/2)^mu W(-z^2/2) for b = -1, c = 1.
double corollary_source(const KBesselParams& params, Reduction reduction, double z,
                        const SeriesControl& ctl = {});

/// omega(t) rebuilt through ordinary gamma functions:
///   (gamma)_{n,k} = k^n (gamma/k)_n,  Gamma_k(x) = k^{x/k-1} Gamma(x/k),
/// i.e. N0-free source of the Fox-Wright-form corollaries. Must agree with
/// gen_k_bessel.
double psi_form_source(const KBesselParams& params, double t,
                       const SeriesControl& ctl = {});

}  // namespace kkinetics
