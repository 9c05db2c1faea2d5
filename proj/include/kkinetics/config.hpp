#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "kkinetics/kinetics.hpp"

namespace kkinetics {

/// Invalid job configuration (bad JSON, unknown key, missing or out-of-range
/// field). The message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A solve/verify job: the problem, its output grid and series overrides.
struct JobConfig {
  KineticProblem problem;
  double t_end = 1.0;
  int n_points = 101;
  SeriesControl control;
};

/// Parses the flat JSON job document. Field names:
///   theorem, n0, d, a, nu, k, gamma, lambda, mu, b, c, t_end, n_points,
///   max_terms, rel_tol
/// `a` is required for theorem 3 and ignored otherwise; max_terms and
/// rel_tol override `defaults`. Unknown keys are rejected.
JobConfig parse_job_config(const std::string& json_text, const SeriesControl& defaults = {});

JobConfig load_job_config(const std::filesystem::path& path,
                          const SeriesControl& defaults = {});

/// Default series control, honoring KKINETICS_MAX_TERMS when set.
/// Throws ConfigError if the variable is not a positive integer.
SeriesControl default_series_control();

}  // namespace kkinetics
