#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace kkinetics {

/// Shortest decimal that parses back to exactly `x`.
std::string format_double(double x);

/// Comma-separated table with a header row and '\n' line endings.
/// columns[c][r] is the value in row r of column c.
std::string render_csv(std::span<const std::string> header,
                       std::span<const std::vector<double>> columns);

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label = "t";
  std::string y_label = "N(t)";
  std::vector<ChartSeries> series;
};

/// Standalone SVG 1.1 document, 800x600 viewBox, linear axes, one polyline
/// per series and a legend.
std::string render_svg(const LineChart& chart);

/// Writes `contents` to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace kkinetics
