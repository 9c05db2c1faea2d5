#include "kkinetics/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#ifdef KKINETICS_WITH_OPENMP
#include <omp.h>
#endif

namespace kkinetics {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Theorem1: return "theorem1";
    case Variant::Theorem2: return "theorem2";
    case Variant::Theorem3: return "theorem3";
  }
  return "unknown";
}

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << "KineticProblem: " << name << " = " << v << " must be positive";
    throw DomainError(os.str());
  }
}

void validate_common(const KineticProblem& p) {
  require_positive(p.n0, "n0");
  require_positive(p.d, "d");
  require_positive(p.nu, "nu");
  p.params.validate();
}

// N0 sum_n A_n (z/2)^{mu+2n} [Gamma(beta_n) E_{nu,beta_n}(-rate^nu t^nu)],
// A_n = (-c)^n (gamma)_{n,k} / [Gamma_k(mu + lambda n + (b+1)/2) (n!)^2].
// beta_n = mu + 2n + 1 when `power_nu` is false, nu (mu + 2n) + 1 otherwise.
PointSolution solve_series(const KineticProblem& prob, double t, bool power_nu,
                           const SeriesControl& ctl) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError("solve: t must be non-negative and finite");
  const KBesselParams& p = prob.params;
  const double z = prob.source_argument(t);
  const double ml_arg = -std::pow(prob.rate(), prob.nu) * std::pow(t, prob.nu);
  const wide_real shift = (static_cast<wide_real>(p.b) + 1) / 2;
  const wide_real log_half_z = z > 0.0 ? std::log(static_cast<wide_real>(z) / 2) : 0.0L;
  const SeriesControl inner = ctl.tightened(10.0);

  SignedLog poch{1, 0.0};
  double inner_tail = 0.0;
  auto term = [&](int n) -> SignedLog {
    const SignedLog pn = poch;
    poch = poch * SignedLog::from(p.gamma + static_cast<wide_real>(n) * p.k);
    const wide_real arg = p.mu + static_cast<wide_real>(p.lambda) * n + shift;
    if (!(arg > 0))
      throw DomainError("solve: k-gamma argument is not positive at n = " + std::to_string(n), n);
    if (z == 0.0 || pn.sign == 0) return SignedLog::zero();
    const SignedLog cn = signed_pow(-p.c, n);
    if (cn.sign == 0) return SignedLog::zero();
    const double order = p.mu + 2.0 * n;
    const SignedLog coef = cn * pn *
                           SignedLog{1, -log_k_gamma_wide(arg, p.k) -
                                            2 * log_gamma_wide(n + 1.0L) + order * log_half_z};
    const double beta = power_nu ? prob.nu * order + 1.0 : order + 1.0;
    const SeriesValue ml = scaled_ml({prob.nu, beta}, ml_arg, inner);
    inner_tail += static_cast<double>(std::exp(coef.log_abs)) * ml.tail;
    return coef * SignedLog::from(ml.value);
  };
  const SeriesValue outer = sum_log_series(term, ctl, "kinetic solution");
  PointSolution out;
  out.value = prob.n0 * outer.value;
  out.terms = outer.terms;
  out.tail = prob.n0 * (outer.tail + inner_tail);
  return out;
}

void require_variant(const KineticProblem& prob, Variant v) {
  if (prob.variant != v)
    throw PreconditionError("solver for " + std::string(to_string(v)) +
                            " called with a " + std::string(to_string(prob.variant)) +
                            " problem");
}

}  // namespace

void KineticProblem::validate() const {
  validate_common(*this);
  if (variant == Variant::Theorem3) {
    require_positive(a, "a");
    if (!coincidence_harness && !(std::fabs(a - d) > 0.0))
      throw DomainError("KineticProblem: Theorem 3 requires a != d");
  }
}

double KineticProblem::source_argument(double t) const {
  if (variant == Variant::Theorem1) return t;
  return std::pow(d, nu) * std::pow(t, nu);
}

KineticProblem theorem3_coincidence_harness(KineticProblem theorem2) {
  theorem2.variant = Variant::Theorem3;
  theorem2.a = theorem2.d;
  theorem2.coincidence_harness = true;
  return theorem2;
}

double SolutionTable::max_tail() const {
  double m = 0.0;
  for (double t : tails) m = std::max(m, t);
  return m;
}

PointSolution solve_theorem1(const KineticProblem& prob, double t, const SeriesControl& ctl) {
  require_variant(prob, Variant::Theorem1);
  prob.validate();
  return solve_series(prob, t, false, ctl);
}

PointSolution solve_theorem2(const KineticProblem& prob, double t, const SeriesControl& ctl) {
  require_variant(prob, Variant::Theorem2);
  prob.validate();
  return solve_series(prob, t, true, ctl);
}

PointSolution solve_theorem3(const KineticProblem& prob, double t, const SeriesControl& ctl) {
  require_variant(prob, Variant::Theorem3);
  prob.validate();
  return solve_series(prob, t, true, ctl);
}

PointSolution solve_point(const KineticProblem& prob, double t, const SeriesControl& ctl) {
  switch (prob.variant) {
    case Variant::Theorem1: return solve_theorem1(prob, t, ctl);
    case Variant::Theorem2: return solve_theorem2(prob, t, ctl);
    case Variant::Theorem3: return solve_theorem3(prob, t, ctl);
  }
  throw PreconditionError("unknown variant");
}

namespace {

SolutionTable prepare_table(const KineticProblem& prob, std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]))
      throw PreconditionError("solve_grid: times must be non-negative and finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw PreconditionError("solve_grid: times must be strictly increasing");
  }
  SolutionTable table;
  table.problem = prob;
  table.times.assign(grid.begin(), grid.end());
  table.values.resize(grid.size());
  table.terms.resize(grid.size());
  table.tails.resize(grid.size());
  return table;
}

void store(SolutionTable& table, std::size_t i, const PointSolution& s) {
  table.values[i] = s.value;
  table.terms[i] = s.terms;
  table.tails[i] = s.tail;
}

}  // namespace

SolutionTable solve_grid_serial(const KineticProblem& prob, std::span<const double> grid,
                                const SeriesControl& ctl) {
  SolutionTable table = prepare_table(prob, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) store(table, i, solve_point(prob, grid[i], ctl));
  return table;
}

SolutionTable solve_grid(const KineticProblem& prob, std::span<const double> grid,
                         const SeriesControl& ctl) {
  SolutionTable table = prepare_table(prob, grid);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
#ifdef KKINETICS_WITH_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      store(table, idx, solve_point(prob, grid[idx], ctl));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  // Report the lowest failing index so the error does not depend on scheduling.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return table;
}

std::vector<double> uniform_grid(double t_end, int n_points) {
  if (n_points < 1) throw PreconditionError("uniform_grid: n_points must be >= 1");
  if (n_points == 1) return {0.0};
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw PreconditionError("uniform_grid: t_end must be positive");
  std::vector<double> grid(static_cast<std::size_t>(n_points));
  const double h = t_end / (n_points - 1);
  for (int i = 0; i < n_points; ++i) grid[static_cast<std::size_t>(i)] = i * h;
  grid.back() = t_end;
  return grid;
}

double corollary_source(const KBesselParams& params, Reduction reduction, double z,
                        const SeriesControl& ctl) {
  params.validate();
  if (!(z >= 0.0)) throw DomainError("corollary_source: z must be non-negative");
  const double prefactor = std::pow(z / 2.0, params.mu);
  switch (reduction) {
    case Reduction::BesselJ:
      if (params.b != 1.0 || params.c != 1.0)
        throw PreconditionError("corollary_source: BesselJ reduction needs b = c = 1");
      return prefactor *
             k_bessel_j(params.k, params.gamma, params.lambda, params.mu, z * z / 2.0, ctl).value;
    case Reduction::WrightW:
      if (params.b != -1.0 || params.c != 1.0)
        throw PreconditionError("corollary_source: WrightW reduction needs b = -1, c = 1");
      return prefactor *
             k_wright_w(params.k, params.gamma, params.lambda, params.mu, -z * z / 2.0, ctl).value;
  }
  throw PreconditionError("corollary_source: unknown reduction");
}

double psi_form_source(const KBesselParams& params, double t, const SeriesControl& ctl) {
  params.validate();
  if (!(t >= 0.0)) throw DomainError("psi_form_source: t must be non-negative");
  if (t == 0.0) return 0.0;
  const double k = params.k;
  const double shift = (params.b + 1.0) / (2.0 * k);
  // 1Psi2[(gamma/k, 1); (mu/k + (b+1)/(2k), lambda/k), (1, 1) | X]
  FoxWrightSpec spec;
  spec.upper = {{params.gamma / k, 1.0}};
  spec.lower = {{params.mu / k + shift, params.lambda / k}, {1.0, 1.0}};
  const double x = -params.c * std::pow(k, 1.0 - params.lambda / k) * (t / 2.0) * (t / 2.0);
  const double psi = fox_wright(spec, x, ctl).value;
  const double log_prefactor = (1.0 - params.mu / k - shift) * std::log(k) -
                               log_gamma(params.gamma / k) + params.mu * std::log(t / 2.0);
  return std::exp(log_prefactor) * psi;
}

}  // namespace kkinetics
