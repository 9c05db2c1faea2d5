#include <doctest.h>

#include <cmath>
#include <vector>

#include "kkinetics/figures.hpp"
#include "kkinetics/fracoracle.hpp"
#include "oracle_values.hpp"

using namespace kkinetics;

namespace {

double rel(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

std::vector<double> sample(const QuadratureGrid& g, double (*f)(double)) {
  std::vector<double> out(g.size());
  for (int j = 0; j <= g.n_steps(); ++j) out[static_cast<std::size_t>(j)] = f(g.node(j));
  return out;
}

double max_abs_error_vs_ml(double nu, int n_steps) {
  const QuadratureGrid g(2.0, n_steps, nu);
  const OracleSolution s = solve_volterra(1.0, [](double) { return 1.0; }, 1.0, g);
  double err = 0.0;
  for (int j = 0; j <= n_steps; ++j)
    err = std::max(err, std::fabs(s.values[static_cast<std::size_t>(j)] -
                                  haubold_mathai(1.0, 1.0, nu, g.node(j))));
  return err;
}

}  // namespace

TEST_SUITE("quadrature grid") {
  TEST_CASE("constants are integrated exactly") {
    for (double nu : {0.25, 0.5, 0.75, 1.0, 1.5}) {
      const QuadratureGrid g(1.0, 4096, nu);
      CAPTURE(nu);
      const std::vector<double> ones(g.size(), 1.0);
      const std::vector<double> all = rl_integral_all(g, ones);
      double worst = 0.0;
      for (int j = 1; j <= g.n_steps(); ++j)
        worst = std::max(worst, rel(all[static_cast<std::size_t>(j)],
                                    std::pow(g.node(j), nu) / std::tgamma(nu + 1.0)));
      CHECK(worst <= 1e-12);
    }
  }

  TEST_CASE("weights are finite and non-negative for nu <= 1") {
    for (double nu : {0.25, 0.5, 1.0}) {
      const QuadratureGrid g(3.0, 300, nu);
      for (int j = 0; j <= g.n_steps(); j += 7)
        for (int i = 0; i <= j; ++i) {
          const double w = g.weight(j, i);
          CHECK(std::isfinite(w));
          CHECK(w >= 0.0);
        }
    }
  }

  TEST_CASE("parallel and serial builds agree exactly") {
    for (double nu : {0.3, 1.0, 1.7}) {
      const QuadratureGrid par(1.5, 2000, nu);
      const QuadratureGrid ser = QuadratureGrid::build_serial(1.5, 2000, nu);
      for (int j = 0; j <= 2000; j += 13)
        for (int i = 0; i <= j; i += 5) CHECK(par.weight(j, i) == ser.weight(j, i));
    }
  }

  TEST_CASE("grid geometry") {
    const QuadratureGrid g = QuadratureGrid::with_max_step(0.05, 1.0 / 2048, 1.0);
    CHECK(g.n_steps() == 103);
    CHECK(g.h() <= 1.0 / 2048);
    CHECK(g.node(g.n_steps()) == 0.05);
    CHECK(QuadratureGrid::with_max_step(1.0, 1.0 / 2048, 1.0).n_steps() == 2048);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(QuadratureGrid(0.0, 10, 1.0), PreconditionError);
    CHECK_THROWS_AS(QuadratureGrid(1.0, 0, 1.0), PreconditionError);
    CHECK_THROWS_AS(QuadratureGrid(1.0, 10, 0.0), PreconditionError);
    const QuadratureGrid g(1.0, 10, 0.5);
    CHECK_THROWS_AS(g.weight(3, 4), PreconditionError);
    CHECK_THROWS_AS(g.weight(11, 0), PreconditionError);
    const std::vector<double> short_samples(5, 1.0);
    CHECK_THROWS_AS(rl_integral(g, short_samples, 8), PreconditionError);
    CHECK_THROWS_AS(rl_integral_all(g, short_samples), PreconditionError);
  }
}

TEST_SUITE("rl_integral") {
  TEST_CASE("f(s) = s with nu = 1 is exact") {
    const QuadratureGrid g(2.0, 64, 1.0);
    const auto f = sample(g, [](double s) { return s; });
    for (int j = 1; j <= 64; ++j) CHECK(rel(rl_integral(g, f, j), g.node(j) * g.node(j) / 2) < 1e-12);
  }

  TEST_CASE("power rule is second order") {
    auto max_err = [](int n, double mu, double nu) {
      const QuadratureGrid g(1.0, n, nu);
      std::vector<double> f(g.size());
      for (int j = 0; j <= n; ++j) f[static_cast<std::size_t>(j)] = std::pow(g.node(j), mu);
      double err = 0.0;
      const double c = std::tgamma(mu + 1) / std::tgamma(mu + nu + 1);
      for (int j = 0; j <= n; ++j)
        err = std::max(err, std::fabs(rl_integral(g, f, j) - c * std::pow(g.node(j), mu + nu)));
      return err;
    };
    for (auto [mu, nu] : {std::pair{2.0, 0.5}, std::pair{1.5, 0.5}, std::pair{3.0, 1.25}}) {
      CAPTURE(mu);
      CAPTURE(nu);
      const double e1 = max_err(128, mu, nu), e2 = max_err(256, mu, nu);
      CHECK(e1 <= 1.0 / (128.0 * 128.0));
      CHECK(e1 / e2 >= 3.5);
    }
  }

  TEST_CASE("parallel and serial evaluation agree exactly") {
    const QuadratureGrid g(1.0, 1500, 0.6);
    const auto f = sample(g, [](double s) { return std::cos(3 * s) + s * s; });
    CHECK(rl_integral_all(g, f) == rl_integral_all_serial(g, f));
  }
}

TEST_SUITE("solve_volterra") {
  TEST_CASE("zero source") {
    const QuadratureGrid g(1.0, 100, 0.5);
    const OracleSolution s = solve_volterra(2.0, [](double) { return 0.0; }, 3.0, g);
    for (double v : s.values) CHECK(v == 0.0);
    CHECK(s.values.size() == g.size());
  }

  TEST_CASE("nu = 1 reduces to exponential decay at second order") {
    auto err = [](int n) {
      const QuadratureGrid g(1.0, n, 1.0);
      const OracleSolution s = solve_volterra(2.0, [](double) { return 1.0; }, 3.0, g, "one");
      double e = 0.0;
      for (int j = 0; j <= n; ++j)
        e = std::max(e, std::fabs(s.values[static_cast<std::size_t>(j)] - 2.0 * std::exp(-3.0 * g.node(j))));
      return e;
    };
    const double e1 = err(256), e2 = err(512);
    CHECK(e1 < 1e-4);
    CHECK(e1 / e2 > 3.9);
  }

  TEST_CASE("nu = 1/2 matches the erfcx closed form") {
    const double d = 2.0;
    const QuadratureGrid g(1.0, 2048, 0.5);
    const OracleSolution s = solve_volterra(1.5, [](double) { return 1.0; }, d, g);
    CHECK(s.values[0] == 1.5);
    double worst = 0.0;
    for (int j = 0; j <= g.n_steps(); ++j) {
      const double z = std::sqrt(d * g.node(j));
      const double exact = 1.5 * std::exp(z * z) * std::erfc(z);
      worst = std::max(worst, rel(s.values[static_cast<std::size_t>(j)], exact));
    }
    CHECK(worst <= 5e-4);
  }

  TEST_CASE("halving the step reduces the error") {
    CHECK(max_abs_error_vs_ml(1.0, 1024) / max_abs_error_vs_ml(1.0, 2048) >= 3.0);
    CHECK(max_abs_error_vs_ml(0.5, 1024) / max_abs_error_vs_ml(0.5, 2048) >= 1.9);
  }

  TEST_CASE("preconditions") {
    const QuadratureGrid g(1.0, 10, 0.5);
    CHECK_THROWS_AS(solve_volterra(1.0, [](double) { return 1.0; }, 0.0, g), PreconditionError);
    const std::vector<double> wrong(3, 1.0);
    CHECK_THROWS_AS(solve_volterra_sampled(1.0, wrong, 1.0, g), PreconditionError);
    const KineticProblem p = FigureSpec::builtin(1).problem(1.0);
    CHECK_THROWS_AS(solve_problem_volterra(p, g), PreconditionError);
  }
}

TEST_SUITE("haubold_mathai") {
  TEST_CASE("examples") {
    CHECK(haubold_mathai(2.0, 1.0, 0.5, 0.0) == 2.0);
    CHECK(rel(haubold_mathai(2.0, 1.0, 1.0, 1.0), 2.0 * 0.36787944117144233) < 1e-14);
    CHECK(rel(haubold_mathai(2.0, 1.0, 0.5, 1.0), 2.0 * oracle::kMl_0p5_1_m1) < 1e-13);
  }

  TEST_CASE("cross-check with the Volterra solver") {
    const QuadratureGrid g(1.0, 2048, 0.5);
    const OracleSolution s = solve_volterra(2.0, [](double) { return 1.0; }, 1.0, g);
    CHECK(rel(s.values.back(), haubold_mathai(2.0, 1.0, 0.5, 1.0)) < 5e-4);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(haubold_mathai(1.0, 0.0, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(haubold_mathai(1.0, 1.0, -0.5, 1.0), DomainError);
    CHECK_THROWS_AS(haubold_mathai(1.0, 1.0, 0.5, -1.0), DomainError);
  }
}

TEST_SUITE("residual") {
  const KineticProblem fig1 = FigureSpec::builtin(1).problem(1.0);

  TEST_CASE("exact discrete solution has a round-off residual") {
    const QuadratureGrid g(1.0, 512, 0.7);
    std::vector<double> f(g.size());
    for (int j = 0; j <= 512; ++j) f[static_cast<std::size_t>(j)] = std::sin(2 * g.node(j)) + 1.0;
    const OracleSolution s = solve_volterra_sampled(2.0, f, 3.0, g);
    CHECK(residual_sampled(2.0, f, 3.0, s.values, g) <= 1e-13);
  }

  TEST_CASE("series solution on the figure 1 set") {
    const QuadratureGrid g = QuadratureGrid::with_max_step(1.0, 1.0 / 2048, fig1.nu);
    const SolutionTable t = solve_grid(fig1, g.nodes());
    CHECK(residual(fig1, t, g) <= 5e-4);
  }

  TEST_CASE("a 1% perturbation of an order-one solution is detected") {
    KineticProblem big = fig1;
    big.n0 = 20.0;
    const QuadratureGrid g(1.0, 512, big.nu);
    SolutionTable t = solve_grid(big, g.nodes());
    CHECK(residual(big, t, g) <= 5e-4);
    const auto peak = std::max_element(t.values.begin(), t.values.end());
    *peak *= 1.01;
    CHECK(residual(big, t, g) >= 5e-3);
  }

  TEST_CASE("grid mismatch") {
    const QuadratureGrid g(1.0, 64, fig1.nu);
    const SolutionTable wrong_size = solve_grid(fig1, uniform_grid(1.0, 10));
    CHECK_THROWS_AS(residual(fig1, wrong_size, g), PreconditionError);
    const SolutionTable wrong_times = solve_grid(fig1, uniform_grid(2.0, 65));
    CHECK_THROWS_AS(residual(fig1, wrong_times, g), PreconditionError);
  }

  TEST_CASE("max_rel_diff") {
    const std::vector<double> a{0.0, 1.0, 2.0}, b{0.0, 1.0, 2.2};
    CHECK(max_rel_diff(a, b) == doctest::Approx(0.2 / 2.2));
    CHECK(max_rel_diff(a, a) == 0.0);
    CHECK_THROWS_AS(max_rel_diff(a, std::vector<double>{1.0}), PreconditionError);
  }
}

TEST_SUITE("laplace") {
  TEST_CASE("closed-form transforms") {
    CHECK(rel(laplace_transform([](double t) { return std::exp(-t); }, 5.0), 1.0 / 6.0) < 1e-12);
    CHECK(rel(laplace_transform([](double t) { return t * t; }, 10.0), 2e-3) < 1e-12);
    CHECK(laplace_transform([](double) { return 0.0; }, 3.0) == 0.0);
  }

  TEST_CASE("zero solution and source") {
    CHECK(laplace_defect(1.0, 2.0, 0.5, [](double) { return 0.0; }, [](double) { return 0.0; },
                         4.0) == 0.0);
  }

  TEST_CASE("nu = 1 constant source against 1/p and 1/(p+d)") {
    const double d = 2.0, n0 = 3.0;
    for (double p : {3.0, 5.0, 10.0}) {
      const double defect = laplace_defect(
          n0, d, 1.0, [&](double t) { return n0 * std::exp(-d * t); }, [](double) { return 1.0; }, p);
      CHECK(defect <= 1e-6);
    }
  }

  TEST_CASE("figure 1 source transform matches the termwise transform") {
    const KineticProblem p = FigureSpec::builtin(1).problem(1.0);
    auto f = [&](double t) { return problem_source(p, t); };
    CHECK(rel(laplace_transform(f, 5.0), oracle::kFig1SourceLaplace_p5) < 1e-10);
    CHECK(rel(laplace_transform(f, 10.0), oracle::kFig1SourceLaplace_p10) < 1e-10);
  }

  TEST_CASE("figure 1 series solution at p = 10") {
    const KineticProblem p = FigureSpec::builtin(1).problem(1.0);
    CHECK(laplace_check(p, [&](double t) { return solve_point(p, t).value; }, 10.0) <= 1e-3);
  }

  TEST_CASE("a wrong solution is detected") {
    const KineticProblem p = FigureSpec::builtin(1).problem(1.0);
    const double defect =
        laplace_check(p, [&](double t) { return 1.05 * solve_point(p, t).value; }, 10.0);
    CHECK(defect >= 1e-2);
  }

  TEST_CASE("preconditions") {
    const KineticProblem p = FigureSpec::builtin(1).problem(1.0);
    CHECK_THROWS_AS(laplace_check(p, [](double) { return 0.0; }, 2.0), PreconditionError);
    CHECK_THROWS_AS(laplace_transform([](double) { return 1.0; }, 0.0), PreconditionError);
  }
}

TEST_SUITE("verify_problem") {
  TEST_CASE("figure 1 set at h = 1/2048") {
    const KineticProblem p = FigureSpec::builtin(1).problem(1.0);
    const VerificationReport r = verify_problem(p, 1.0, 1.0 / 2048);
    CHECK(r.n_steps == 2048);
    CHECK(r.h == 1.0 / 2048);
    CHECK(r.residual <= 5e-4);
    CHECK(r.max_rel_diff <= 5e-4);
  }
}
