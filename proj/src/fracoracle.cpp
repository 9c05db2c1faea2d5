#include "kkinetics/fracoracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef KKINETICS_WITH_OPENMP
#include <omp.h>
#endif

namespace kkinetics {

namespace {

// sum_{k >= k0} C(p, k) s^k x^k for |x| <= 1/2, with s = +1 or -1.
// Used for the finite differences of m^{nu+1}, which cancel badly when
// expanded directly for large m.
double binomial_tail(double p, double x, int k0, double s) {
  double coef = 1.0;  // C(p, k)
  double xk = 1.0;    // (s x)^k
  for (int k = 1; k < k0; ++k) {
    coef *= (p - k + 1) / k;
    xk *= s * x;
  }
  double sum = 0.0;
  for (int k = k0; k < 400; ++k) {
    coef *= (p - k + 1) / k;
    xk *= s * x;
    const double term = coef * xk;
    sum += term;
    if (coef == 0.0 || std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

// (j-1)^{p} - (j-1-nu) j^{nu}, p = nu + 1.
double first_column(int j, double nu) {
  if (j == 0) return 0.0;
  if (j == 1) return nu;
  const double p = nu + 1.0;
  return std::pow(static_cast<double>(j), p) * binomial_tail(p, 1.0 / j, 2, -1.0);
}

// (m+1)^p - 2 m^p + (m-1)^p, p = nu + 1.
double interior(int m, double nu) {
  const double p = nu + 1.0;
  if (m == 1) return std::pow(2.0, p) - 2.0;
  const double x = 1.0 / m;
  // (1+x)^p + (1-x)^p - 2 = 2 sum_{k>=1} C(p, 2k) x^{2k}
  double coef = 1.0;
  double sum = 0.0;
  double x2k = 1.0;
  for (int k = 1; k < 400; ++k) {
    coef *= (p - k + 1) / k;
    if (k % 2 != 0) {
      x2k *= x;
      continue;
    }
    x2k *= x;
    const double term = coef * x2k;
    sum += term;
    if (coef == 0.0 || std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return 2.0 * std::pow(static_cast<double>(m), p) * sum;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

QuadratureGrid::QuadratureGrid(double t_end, int n_steps, double nu)
    : QuadratureGrid(t_end, n_steps, nu, true) {}

QuadratureGrid QuadratureGrid::build_serial(double t_end, int n_steps, double nu) {
  return QuadratureGrid(t_end, n_steps, nu, false);
}

QuadratureGrid QuadratureGrid::with_max_step(double t_end, double max_step, double nu) {
  if (!(max_step > 0.0)) throw PreconditionError("QuadratureGrid: step must be positive");
  const double ratio = t_end / max_step;
  const auto n = static_cast<int>(std::ceil(ratio - 1e-9 * ratio));
  return QuadratureGrid(t_end, std::max(n, 1), nu);
}

QuadratureGrid::QuadratureGrid(double t_end, int n_steps, double nu, bool parallel)
    : t_end_(t_end), n_steps_(n_steps), nu_(nu) {
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw PreconditionError("QuadratureGrid: t_end must be positive, got " + fmt(t_end));
  if (n_steps < 1) throw PreconditionError("QuadratureGrid: n_steps must be >= 1");
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw PreconditionError("QuadratureGrid: nu must be positive, got " + fmt(nu));
  h_ = t_end / n_steps;
  scale_ = std::exp(nu * std::log(h_) - log_gamma(nu + 2.0));
  first_.resize(size());
  interior_.resize(size());
  const auto n = static_cast<std::ptrdiff_t>(size());
  if (parallel) {
#ifdef KKINETICS_WITH_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      first_[static_cast<std::size_t>(j)] = first_column(static_cast<int>(j), nu);
      interior_[static_cast<std::size_t>(j)] = j == 0 ? 1.0 : interior(static_cast<int>(j), nu);
    }
  } else {
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      first_[static_cast<std::size_t>(j)] = first_column(static_cast<int>(j), nu);
      interior_[static_cast<std::size_t>(j)] = j == 0 ? 1.0 : interior(static_cast<int>(j), nu);
    }
  }
}

std::vector<double> QuadratureGrid::nodes() const {
  std::vector<double> out(size());
  for (int j = 0; j <= n_steps_; ++j) out[static_cast<std::size_t>(j)] = node(j);
  return out;
}

double QuadratureGrid::weight(int j, int i) const {
  if (j < 0 || j > n_steps_ || i < 0 || i > j)
    throw PreconditionError("QuadratureGrid::weight: index out of range");
  if (j == 0) return 0.0;
  if (i == 0) return scale_ * first_[static_cast<std::size_t>(j)];
  return scale_ * interior_[static_cast<std::size_t>(j - i)];
}

double rl_integral(const QuadratureGrid& grid, std::span<const double> samples, int j) {
  if (j < 0 || j > grid.n_steps())
    throw PreconditionError("rl_integral: index out of range");
  if (samples.size() < static_cast<std::size_t>(j) + 1)
    throw PreconditionError("rl_integral: samples do not reach node " + std::to_string(j));
  CompensatedSum acc;
  for (int i = 0; i <= j; ++i) acc.add(grid.weight(j, i) * samples[static_cast<std::size_t>(i)]);
  return acc.value();
}

std::vector<double> rl_integral_all(const QuadratureGrid& grid, std::span<const double> samples) {
  if (samples.size() < grid.size())
    throw PreconditionError("rl_integral_all: samples shorter than the grid");
  std::vector<double> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#ifdef KKINETICS_WITH_OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::ptrdiff_t j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] = rl_integral(grid, samples, static_cast<int>(j));
  return out;
}

std::vector<double> rl_integral_all_serial(const QuadratureGrid& grid,
                                           std::span<const double> samples) {
  if (samples.size() < grid.size())
    throw PreconditionError("rl_integral_all: samples shorter than the grid");
  std::vector<double> out(grid.size());
  for (int j = 0; j <= grid.n_steps(); ++j)
    out[static_cast<std::size_t>(j)] = rl_integral(grid, samples, j);
  return out;
}

OracleSolution solve_volterra_sampled(double n0, std::span<const double> source_values,
                                      double rate, const QuadratureGrid& grid,
                                      std::string source_label) {
  if (source_values.size() != grid.size())
    throw PreconditionError("solve_volterra: source samples do not match the grid");
  if (!(rate > 0.0)) throw PreconditionError("solve_volterra: rate must be positive");
  const double r = std::pow(rate, grid.nu());
  OracleSolution sol{grid, std::vector<double>(grid.size()), std::move(source_label), rate};
  sol.values[0] = n0 * source_values[0];
  for (int j = 1; j <= grid.n_steps(); ++j) {
    CompensatedSum history;
    for (int i = 0; i < j; ++i)
      history.add(grid.weight(j, i) * sol.values[static_cast<std::size_t>(i)]);
    const double diag = 1.0 + r * grid.weight(j, j);
    if (!(diag > 0.0))
      throw InstabilityError("solve_volterra: non-positive diagonal at step " + std::to_string(j));
    sol.values[static_cast<std::size_t>(j)] =
        (n0 * source_values[static_cast<std::size_t>(j)] - r * history.value()) / diag;
  }
  return sol;
}

OracleSolution solve_volterra(double n0, const std::function<double(double)>& source,
                              double rate, const QuadratureGrid& grid,
                              std::string source_label) {
  std::vector<double> f(grid.size());
  for (int j = 0; j <= grid.n_steps(); ++j) f[static_cast<std::size_t>(j)] = source(grid.node(j));
  return solve_volterra_sampled(n0, f, rate, grid, std::move(source_label));
}

double problem_source(const KineticProblem& prob, double t, const SeriesControl& ctl) {
  return gen_k_bessel(prob.params, prob.source_argument(t), ctl).value;
}

OracleSolution solve_problem_volterra(const KineticProblem& prob, const QuadratureGrid& grid,
                                      const SeriesControl& ctl) {
  if (std::fabs(grid.nu() - prob.nu) > 0.0)
    throw PreconditionError("solve_problem_volterra: grid order differs from problem nu");
  const char* label = prob.variant == Variant::Theorem1 ? "omega(t)" : "omega(d^nu t^nu)";
  return solve_volterra(
      prob.n0, [&](double t) { return problem_source(prob, t, ctl); }, prob.rate(), grid, label);
}

double haubold_mathai(double n0, double c_rate, double nu, double t, const SeriesControl& ctl) {
  if (!(c_rate > 0.0)) throw DomainError("haubold_mathai: c must be positive");
  if (!(nu > 0.0)) throw DomainError("haubold_mathai: nu must be positive");
  if (!(t >= 0.0)) throw DomainError("haubold_mathai: t must be non-negative");
  return n0 * mittag_leffler({nu, 1.0}, -std::pow(c_rate * t, nu), ctl).value;
}

double residual_sampled(double n0, std::span<const double> source_values, double rate,
                        std::span<const double> values, const QuadratureGrid& grid) {
  if (values.size() != grid.size() || source_values.size() != grid.size())
    throw PreconditionError("residual: samples do not match the grid");
  const double r = std::pow(rate, grid.nu());
  const std::vector<double> integral = rl_integral_all(grid, values);
  double worst = 0.0;
  double scale = 1.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    worst = std::max(worst, std::fabs(values[j] - n0 * source_values[j] + r * integral[j]));
    scale = std::max(scale, std::fabs(values[j]));
  }
  return worst / scale;
}

double residual(const KineticProblem& prob, const SolutionTable& series_values,
                const QuadratureGrid& grid, const SeriesControl& ctl) {
  if (series_values.size() != grid.size())
    throw PreconditionError("residual: table has " + std::to_string(series_values.size()) +
                            " points, grid has " + std::to_string(grid.size()));
  const double tol = 1e-12 * grid.t_end();
  for (int j = 0; j <= grid.n_steps(); ++j)
    if (std::fabs(series_values.times[static_cast<std::size_t>(j)] - grid.node(j)) > tol)
      throw PreconditionError("residual: table time " + std::to_string(j) +
                              " is not on the grid node");
  if (std::fabs(grid.nu() - prob.nu) > 0.0)
    throw PreconditionError("residual: grid order differs from problem nu");
  std::vector<double> f(grid.size());
  for (int j = 0; j <= grid.n_steps(); ++j)
    f[static_cast<std::size_t>(j)] = problem_source(prob, grid.node(j), ctl);
  return residual_sampled(prob.n0, f, prob.rate(), series_values.values, grid);
}

double max_rel_diff(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw PreconditionError("max_rel_diff: length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::max(std::fabs(x[i]), std::fabs(y[i]));
    if (m == 0.0) continue;
    worst = std::max(worst, std::fabs(x[i] - y[i]) / m);
  }
  return worst;
}

namespace {

struct SimpsonPanel {
  double a, b, fa, fm, fb, whole;
};

double adaptive_simpson(const std::function<double(double)>& g, const SimpsonPanel& s,
                        double tol, int depth) {
  const double m = 0.5 * (s.a + s.b);
  const double lm = 0.5 * (s.a + m);
  const double rm = 0.5 * (m + s.b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - s.a) / 6.0 * (s.fa + 4.0 * flm + s.fm);
  const double right = (s.b - m) / 6.0 * (s.fm + 4.0 * frm + s.fb);
  const double delta = left + right - s.whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0)
    throw NonConvergenceError("laplace quadrature: recursion limit reached near t = " + fmt(m));
  return adaptive_simpson(g, {s.a, m, s.fa, flm, s.fm, left}, tol / 2.0, depth - 1) +
         adaptive_simpson(g, {m, s.b, s.fm, frm, s.fb, right}, tol / 2.0, depth - 1);
}

}  // namespace

double laplace_transform(const std::function<double(double)>& f, double p,
                         const LaplaceOptions& opts) {
  if (!(p > 0.0)) throw PreconditionError("laplace_transform: p must be positive");
  // March outward until e^{-p t} max|f| falls below 1e-16 of the integrand
  // peak; f is never evaluated far beyond the truncation point.
  constexpr int kMaxScan = 800;
  const double dt = 0.25 / p;
  double fmax = 0.0;
  double peak = 0.0;
  double t_cut = 0.0;
  for (int i = 0;; ++i) {
    if (i > kMaxScan)
      throw NonConvergenceError("laplace_transform: integrand does not decay");
    const double t = dt * i;
    const double ft = std::fabs(f(t));
    fmax = std::max(fmax, ft);
    peak = std::max(peak, ft * std::exp(-p * t));
    if (peak > 0.0 && std::exp(-p * t) * fmax < 1e-16 * peak) {
      t_cut = t;
      break;
    }
    if (peak == 0.0 && p * t >= 40.0) return 0.0;
  }

  auto g = [&](double t) { return std::exp(-p * t) * f(t); };
  // Coarse panels first so the adaptive refinement sees every feature.
  constexpr int kPanels = 64;
  const double scale = peak / p;
  CompensatedSum total;
  for (int i = 0; i < kPanels; ++i) {
    const double a = t_cut * i / kPanels;
    const double b = t_cut * (i + 1) / kPanels;
    const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total.add(adaptive_simpson(g, {a, b, fa, fm, fb, whole},
                               opts.rel_tol * scale / kPanels, opts.max_depth));
  }
  return total.value();
}

double laplace_defect(double n0, double rate, double nu,
                      const std::function<double(double)>& solution,
                      const std::function<double(double)>& source, double p,
                      const LaplaceOptions& opts) {
  const double n_hat = laplace_transform(solution, p, opts);
  const double f_hat = n0 * laplace_transform(source, p, opts);
  const double lhs = n_hat * (1.0 + std::pow(rate, nu) * std::pow(p, -nu));
  if (f_hat == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::fabs(lhs - f_hat) / std::fabs(f_hat);
}

double laplace_check(const KineticProblem& prob,
                     const std::function<double(double)>& series_solver, double p,
                     const LaplaceOptions& opts) {
  if (!(p > prob.rate()))
    throw PreconditionError("laplace_check: p must exceed the rate constant");
  return laplace_defect(
      prob.n0, prob.rate(), prob.nu, series_solver,
      [&](double t) { return problem_source(prob, t); }, p, opts);
}

VerificationReport verify_problem(const KineticProblem& prob, double t_end, double max_step,
                                  const SeriesControl& ctl) {
  prob.validate();
  const QuadratureGrid grid = QuadratureGrid::with_max_step(t_end, max_step, prob.nu);
  const std::vector<double> nodes = grid.nodes();
  const SolutionTable series = solve_grid(prob, nodes, ctl);
  // The oracle evaluates its source at full default precision, independent of ctl.
  const OracleSolution oracle = solve_problem_volterra(prob, grid);
  VerificationReport report;
  report.n_steps = grid.n_steps();
  report.h = grid.h();
  report.residual = residual(prob, series, grid);
  report.max_rel_diff = max_rel_diff(series.values, oracle.values);
  return report;
}

}  // namespace kkinetics
