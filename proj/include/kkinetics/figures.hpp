#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "kkinetics/kinetics.hpp"

namespace kkinetics {

/// Built-in parameter sweep for one published figure:
/// N0 = c = k = 2, b = d = 3, mu = nu = gamma = 1 (a = 1 for figures 6-7),
/// lambda in {1, 1.25, 1.5, 1.75, 2}.
struct FigureSpec {
  int id = 1;
  Variant variant = Variant::Theorem1;
  double t_end = 1.0;

  static constexpr std::array<double, 5> kLambdas = {1.0, 1.25, 1.5, 1.75, 2.0};
  static constexpr int kPoints = 201;

  /// Throws PreconditionError unless 1 <= id <= 7.
  static FigureSpec builtin(int id);
  static std::vector<FigureSpec> all();

  KineticProblem problem(double lambda) const;
};

/// First node t > 0 of a lambda series where N(t) <= 0.
struct PositivityViolation {
  int figure = 0;
  double lambda = 0.0;
  double t = 0.0;
  double value = 0.0;

  std::string describe() const;
};

/// A figure's data: one column of N per lambda on a shared grid.
struct FigureData {
  FigureSpec spec;
  std::vector<double> times;
  std::vector<std::vector<double>> values;  // values[lambda index][t index]
  /// At most one entry per lambda; empty when N(t) > 0 at every t > 0.
  std::vector<PositivityViolation> violations;

  bool positive() const { return violations.empty(); }
};

/// Evaluates all lambda series (grid points in parallel) and records where
/// N(t) > 0 fails for t > 0.
FigureData compute_figure(const FigureSpec& spec, const SeriesControl& ctl = {});

/// CSV header t,N_lambda_1.00,...,N_lambda_2.00 and the data rows.
std::string figure_csv(const FigureData& data);
std::string figure_svg(const FigureData& data);

/// Writes fig<id>.csv and fig<id>.svg under `dir`; returns the CSV path.
std::filesystem::path write_figure(const FigureData& data, const std::filesystem::path& dir);

}  // namespace kkinetics
