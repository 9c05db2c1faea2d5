#include "kkinetics/figures.hpp"

#include <cstdio>
#include <sstream>

#include "kkinetics/report.hpp"

namespace kkinetics {

namespace {

std::string lambda_tag(double lambda) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", lambda);
  return buf;
}

}  // namespace

FigureSpec FigureSpec::builtin(int id) {
  switch (id) {
    case 1: return {1, Variant::Theorem1, 1.0};
    case 2: return {2, Variant::Theorem1, 2.0};
    case 3: return {3, Variant::Theorem1, 3.0};
    case 4: return {4, Variant::Theorem2, 0.05};
    case 5: return {5, Variant::Theorem2, 0.06};
    case 6: return {6, Variant::Theorem3, 0.05};
    case 7: return {7, Variant::Theorem3, 0.06};
    default: throw PreconditionError("figure id must be between 1 and 7");
  }
}

std::vector<FigureSpec> FigureSpec::all() {
  std::vector<FigureSpec> out;
  for (int id = 1; id <= 7; ++id) out.push_back(builtin(id));
  return out;
}

KineticProblem FigureSpec::problem(double lambda) const {
  KineticProblem p;
  p.n0 = 2.0;
  p.d = 3.0;
  p.a = 1.0;
  p.nu = 1.0;
  p.variant = variant;
  p.params = {.k = 2.0, .gamma = 1.0, .lambda = lambda, .mu = 1.0, .b = 3.0, .c = 2.0};
  return p;
}

std::string PositivityViolation::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "figure " << figure << ": N(t) = " << value << " is not positive at lambda = "
     << lambda_tag(lambda) << ", t = " << t;
  return os.str();
}

FigureData compute_figure(const FigureSpec& spec, const SeriesControl& ctl) {
  FigureData data{spec, uniform_grid(spec.t_end, FigureSpec::kPoints), {}, {}};
  for (double lambda : FigureSpec::kLambdas) {
    SolutionTable table = solve_grid(spec.problem(lambda), data.times, ctl);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table.times[i] > 0.0 && !(table.values[i] > 0.0)) {
        data.violations.push_back({spec.id, lambda, table.times[i], table.values[i]});
        break;
      }
    }
    data.values.push_back(std::move(table.values));
  }
  return data;
}

std::string figure_csv(const FigureData& data) {
  std::vector<std::string> header{"t"};
  std::vector<std::vector<double>> columns{data.times};
  for (std::size_t i = 0; i < data.values.size(); ++i) {
    header.push_back("N_lambda_" + lambda_tag(FigureSpec::kLambdas[i]));
    columns.push_back(data.values[i]);
  }
  return render_csv(header, columns);
}

std::string figure_svg(const FigureData& data) {
  LineChart chart;
  chart.title = "Figure " + std::to_string(data.spec.id) + ": " +
                std::string(to_string(data.spec.variant)) + " solution";
  for (std::size_t i = 0; i < data.values.size(); ++i)
    chart.series.push_back(
        {"lambda = " + lambda_tag(FigureSpec::kLambdas[i]), data.times, data.values[i]});
  return render_svg(chart);
}

std::filesystem::path write_figure(const FigureData& data, const std::filesystem::path& dir) {
  const std::string stem = "fig" + std::to_string(data.spec.id);
  const auto csv = dir / (stem + ".csv");
  write_file_atomic(csv, figure_csv(data));
  write_file_atomic(dir / (stem + ".svg"), figure_svg(data));
  return csv;
}

}  // namespace kkinetics
