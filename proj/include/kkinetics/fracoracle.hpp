#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kkinetics/kinetics.hpp"

namespace kkinetics {

/// Uniform grid t_j = j h, j = 0..n_steps, with product-trapezoidal weights
/// for the Riemann-Liouville integral
///   (I^nu f)(t_j) = 1/Gamma(nu) int_0^{t_j} (t_j - s)^{nu-1} f(s) ds
///                 ~ sum_i w[j][i] f(t_i).
///
/// The weights integrate the piecewise-linear interpolant of f exactly
/// against the kernel. They depend on i only through j - i (plus a separate
/// first column), so they are stored in O(n) memory.
class QuadratureGrid {
 public:
  /// Builds the weights with the OpenMP kernel when available.
  QuadratureGrid(double t_end, int n_steps, double nu);

  /// Single-threaded construction; same values as the parallel build.
  static QuadratureGrid build_serial(double t_end, int n_steps, double nu);

  /// Smallest grid with step at most `max_step` covering [0, t_end].
  static QuadratureGrid with_max_step(double t_end, double max_step, double nu);

  double t_end() const { return t_end_; }
  int n_steps() const { return n_steps_; }
  double h() const { return h_; }
  double nu() const { return nu_; }
  std::size_t size() const { return static_cast<std::size_t>(n_steps_) + 1; }
  double node(int j) const { return j == n_steps_ ? t_end_ : j * h_; }
  std::vector<double> nodes() const;

  /// w[j][i] for 0 <= i <= j <= n_steps.
  double weight(int j, int i) const;

 private:
  QuadratureGrid(double t_end, int n_steps, double nu, bool parallel);

  double t_end_;
  int n_steps_;
  double h_;
  double nu_;
  double scale_;                 // h^nu / Gamma(nu + 2)
  std::vector<double> first_;    // first_[j]: unscaled w[j][0]
  std::vector<double> interior_; // interior_[m]: unscaled w[j][j-m], 1 <= m
};

/// (I^nu f)(t_j) from samples f(t_0..t_j).
double rl_integral(const QuadratureGrid& grid, std::span<const double> samples, int j);

/// rl_integral at every node, evaluated in parallel over j.
std::vector<double> rl_integral_all(const QuadratureGrid& grid, std::span<const double> samples);

/// Serial reference for rl_integral_all.
std::vector<double> rl_integral_all_serial(const QuadratureGrid& grid,
                                           std::span<const double> samples);

struct OracleSolution {
  QuadratureGrid grid;
  std::vector<double> values;
  std::string source_label;
  double rate = 0.0;
};

/// Solves N(t) = n0 f(t) - rate^nu (I^nu N)(t) on the grid by forward
/// product-trapezoidal stepping with the diagonal term solved per step.
OracleSolution solve_volterra(double n0, const std::function<double(double)>& source,
                              double rate, const QuadratureGrid& grid,
                              std::string source_label = "custom");

/// Same, with the source already sampled at the grid nodes.
OracleSolution solve_volterra_sampled(double n0, std::span<const double> source_values,
                                      double rate, const QuadratureGrid& grid,
                                      std::string source_label = "custom");

/// Source term f of the problem's equation: omega(t) for Theorem1 and
/// omega(d^nu t^nu) for Theorems 2 and 3.
double problem_source(const KineticProblem& prob, double t, const SeriesControl& ctl = {});

/// Volterra solution of the problem's defining equation.
OracleSolution solve_problem_volterra(const KineticProblem& prob, const QuadratureGrid& grid,
                                      const SeriesControl& ctl = {});

/// n0 E_{nu,1}(-(c t)^nu), the solution of N - n0 = -c^nu I^nu N.
double haubold_mathai(double n0, double c_rate, double nu, double t,
                      const SeriesControl& ctl = {});

/// max_j |N_j - n0 f(t_j) + rate^nu (I^nu N)(t_j)| / max_j max(1, |N_j|).
double residual(const KineticProblem& prob, const SolutionTable& series_values,
                const QuadratureGrid& grid, const SeriesControl& ctl = {});

/// Residual with the source already sampled; used by residual().
double residual_sampled(double n0, std::span<const double> source_values, double rate,
                        std::span<const double> values, const QuadratureGrid& grid);

/// max over nodes with a nonzero value of |x - y| / max(|x|, |y|).
double max_rel_diff(std::span<const double> x, std::span<const double> y);

struct LaplaceOptions {
  double rel_tol = 1e-12;
  int max_depth = 40;
};

/// Relative defect of the transformed equation
///   |N~(p) (1 + rate^nu p^-nu) - n0 F~(p)| / |n0 F~(p)|
/// with both transforms computed by adaptive Simpson quadrature.
double laplace_defect(double n0, double rate, double nu,
                      const std::function<double(double)>& solution,
                      const std::function<double(double)>& source, double p,
                      const LaplaceOptions& opts = {});

/// laplace_defect for a kinetic problem; requires p > prob.rate().
double laplace_check(const KineticProblem& prob,
                     const std::function<double(double)>& series_solver, double p,
                     const LaplaceOptions& opts = {});

/// int_0^inf e^{-p t} f(t) dt, truncated where e^{-p t} max|f| < 1e-16.
double laplace_transform(const std::function<double(double)>& f, double p,
                         const LaplaceOptions& opts = {});

struct VerificationReport {
  int n_steps = 0;
  double h = 0.0;
  /// residual() of the series solution on the quadrature grid.
  double residual = 0.0;
  /// max_rel_diff between the series solution and solve_volterra.
  double max_rel_diff = 0.0;
};

/// Series solution vs the independent Volterra solve on [0, t_end] with step
/// at most `max_step`.
VerificationReport verify_problem(const KineticProblem& prob, double t_end, double max_step,
                                  const SeriesControl& ctl = {});

}  // namespace kkinetics
