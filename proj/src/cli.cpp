#include "kkinetics/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kkinetics/config.hpp"
#include "kkinetics/figures.hpp"
#include "kkinetics/fracoracle.hpp"
#include "kkinetics/report.hpp"

namespace kkinetics {

namespace {

constexpr double kVerifyThreshold = 1e-3;

struct UsageError : Error {
  using Error::Error;
};

void print_result(std::ostream& out, double value, int terms, double tail) {
  out << "value " << format_double(value) << '\n'
      << "terms " << terms << '\n'
      << "tail " << format_double(tail) << '\n';
}

// "a,alpha" -> pair
std::pair<double, double> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("expected 'value,weight', got '" + s + "'");
  try {
    std::size_t used = 0;
    const double first = std::stod(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const double second = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {first, second};
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse parameter pair '" + s + "'");
  }
}

struct EvalArgs {
  double alpha = 1.0, beta = 1.0, x = 0.0;
  double k = 1.0, gamma = 1.0, lambda = 1.0, mu = 1.0, b = 1.0, c = 1.0, z = 0.0;
  int n = 0;
  std::vector<std::string> upper, lower;
  double n0 = 1.0, rate = 1.0, nu = 1.0, t = 0.0;
  std::optional<int> max_terms;
  std::optional<double> rel_tol;
};

SeriesControl control_from(const EvalArgs& a) {
  SeriesControl ctl = default_series_control();
  if (a.max_terms) ctl.max_terms = *a.max_terms;
  if (a.rel_tol) ctl.rel_tol = *a.rel_tol;
  try {
    ctl.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return ctl;
}

void add_control_flags(CLI::App* cmd, EvalArgs& a) {
  cmd->add_option("--max-terms", a.max_terms, "Series term budget");
  cmd->add_option("--rel-tol", a.rel_tol, "Series relative stopping tolerance");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional kinetic equations with generalized k-Bessel sources", "kkinetics"};
  app.require_subcommand(1);

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a special function");
  eval->require_subcommand(1);

  CLI::App* ml = eval->add_subcommand("ml", "Mittag-Leffler E_{alpha,beta}(x)");
  ml->add_option("--alpha", ev.alpha)->required();
  ml->add_option("--beta", ev.beta)->required();
  ml->add_option("--x", ev.x)->required();
  add_control_flags(ml, ev);

  CLI::App* omega = eval->add_subcommand("omega", "Generalized k-Bessel function omega(z)");
  omega->add_option("--k", ev.k)->required();
  omega->add_option("--gamma", ev.gamma)->required();
  omega->add_option("--lambda", ev.lambda)->required();
  omega->add_option("--mu", ev.mu)->required();
  omega->add_option("--b", ev.b)->required();
  omega->add_option("--c", ev.c)->required();
  omega->add_option("--z", ev.z)->required();
  add_control_flags(omega, ev);

  CLI::App* kgamma = eval->add_subcommand("kgamma", "k-gamma function Gamma_k(gamma)");
  kgamma->add_option("--gamma", ev.gamma)->required();
  kgamma->add_option("--k", ev.k)->required();

  CLI::App* kpoch = eval->add_subcommand("kpoch", "k-Pochhammer symbol (gamma)_{n,k}");
  kpoch->add_option("--gamma", ev.gamma)->required();
  kpoch->add_option("--n", ev.n)->required()->check(CLI::NonNegativeNumber);
  kpoch->add_option("--k", ev.k)->required();

  CLI::App* fox = eval->add_subcommand("foxwright", "Fox-Wright function pPsiq(z)");
  fox->add_option("--upper", ev.upper, "Numerator pair a,alpha (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  fox->add_option("--lower", ev.lower, "Denominator pair b,beta (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  fox->add_option("--z", ev.z)->required();
  add_control_flags(fox, ev);

  CLI::App* hm = eval->add_subcommand("hm-baseline", "n0 E_{nu,1}(-(c t)^nu)");
  hm->add_option("--n0", ev.n0)->required();
  hm->add_option("--c", ev.rate)->required();
  hm->add_option("--nu", ev.nu)->required();
  hm->add_option("--t", ev.t)->required();
  add_control_flags(hm, ev);

  std::string config_path, output_path, svg_path;
  CLI::App* solve = app.add_subcommand("solve", "Solve a configured problem on its grid");
  solve->add_option("config", config_path, "JSON job configuration")->required();
  solve->add_option("-o,--output", output_path, "CSV output path")->required();
  solve->add_option("--svg", svg_path, "Optional SVG chart path");

  double grid_step = 1.0 / 2048.0;
  CLI::App* verify = app.add_subcommand("verify", "Check the series solution against the Volterra oracle");
  verify->add_option("config", config_path, "JSON job configuration")->required();
  verify->add_option("--grid-step", grid_step, "Maximum quadrature step")->check(CLI::PositiveNumber);

  int fig_id = 0;
  bool all_figs = false;
  std::string out_dir = ".";
  CLI::App* figs = app.add_subcommand("figures", "Reproduce the built-in figure sweeps");
  auto* fig_opt = figs->add_option("--fig", fig_id, "Figure id 1-7")->check(CLI::Range(1, 7));
  auto* all_opt = figs->add_flag("--all", all_figs, "All seven figures");
  fig_opt->excludes(all_opt);
  figs->add_option("-o,--out", out_dir, "Output directory");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
    if (figs->parsed() && !fig_id && !all_figs)
      throw CLI::ValidationError("figures", "one of --fig or --all is required");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      if (ml->parsed()) {
        const SeriesValue v = mittag_leffler({ev.alpha, ev.beta}, ev.x, control_from(ev));
        print_result(out, v.value, v.terms, v.tail);
      } else if (omega->parsed()) {
        const SeriesValue v = gen_k_bessel({ev.k, ev.gamma, ev.lambda, ev.mu, ev.b, ev.c}, ev.z,
                                           control_from(ev));
        print_result(out, v.value, v.terms, v.tail);
      } else if (kgamma->parsed()) {
        print_result(out, k_gamma(ev.gamma, ev.k), 1, 0.0);
      } else if (kpoch->parsed()) {
        print_result(out, k_pochhammer(ev.gamma, ev.n, ev.k), ev.n, 0.0);
      } else if (fox->parsed()) {
        FoxWrightSpec spec;
        for (const auto& s : ev.upper) spec.upper.push_back(parse_pair(s));
        for (const auto& s : ev.lower) spec.lower.push_back(parse_pair(s));
        const SeriesValue v = fox_wright(spec, ev.z, control_from(ev));
        print_result(out, v.value, v.terms, v.tail);
      } else if (hm->parsed()) {
        const SeriesControl ctl = control_from(ev);
        if (!(ev.rate > 0.0) || !(ev.nu > 0.0) || !(ev.t >= 0.0))
          throw DomainError("hm-baseline: c and nu must be positive, t non-negative");
        const double x = -std::pow(ev.rate * ev.t, ev.nu);
        const SeriesValue v = mittag_leffler({ev.nu, 1.0}, x, ctl);
        print_result(out, ev.n0 * v.value, v.terms, std::fabs(ev.n0) * v.tail);
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      const JobConfig cfg = load_job_config(config_path, default_series_control());
      const std::vector<double> grid = uniform_grid(cfg.t_end, cfg.n_points);
      const SolutionTable table = solve_grid(cfg.problem, grid, cfg.control);
      const std::vector<std::string> header{"t", "N"};
      const std::vector<std::vector<double>> columns{table.times, table.values};
      write_file_atomic(output_path, render_csv(header, columns));
      if (!svg_path.empty()) {
        LineChart chart;
        chart.title = std::string(to_string(cfg.problem.variant)) + " solution";
        chart.series.push_back({"N(t)", table.times, table.values});
        write_file_atomic(svg_path, render_svg(chart));
      }
      out << "points " << table.size() << '\n'
          << "max_tail " << format_double(table.max_tail()) << '\n';
      return kExitOk;
    }

    if (verify->parsed()) {
      const JobConfig cfg = load_job_config(config_path, default_series_control());
      const VerificationReport rep =
          verify_problem(cfg.problem, cfg.t_end, grid_step, cfg.control);
      out << "n_steps " << rep.n_steps << '\n'
          << "h " << format_double(rep.h) << '\n'
          << "residual " << format_double(rep.residual) << '\n'
          << "max_rel_diff " << format_double(rep.max_rel_diff) << '\n';
      bool ok = true;
      if (!(rep.residual <= kVerifyThreshold)) {
        err << "verification failed: residual " << rep.residual << " > " << kVerifyThreshold << '\n';
        ok = false;
      }
      if (!(rep.max_rel_diff <= kVerifyThreshold)) {
        err << "verification failed: max_rel_diff " << rep.max_rel_diff << " > "
            << kVerifyThreshold << '\n';
        ok = false;
      }
      out << "status " << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? kExitOk : kExitFailure;
    }

    if (figs->parsed()) {
      const SeriesControl ctl = default_series_control();
      std::filesystem::create_directories(out_dir);
      std::vector<FigureSpec> specs;
      if (all_figs)
        specs = FigureSpec::all();
      else
        specs.push_back(FigureSpec::builtin(fig_id));
      bool all_positive = true;
      for (const FigureSpec& spec : specs) {
        const FigureData data = compute_figure(spec, ctl);
        out << "wrote " << write_figure(data, out_dir).string() << '\n';
        for (const auto& v : data.violations) err << "positivity violation: " << v.describe() << '\n';
        all_positive = all_positive && data.positive();
      }
      return all_positive ? kExitOk : kExitFailure;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kkinetics
