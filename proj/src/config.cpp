#include "kkinetics/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kkinetics {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "theorem", "n0", "d",     "a",       "nu",       "k",        "gamma",  "lambda",
      "mu",      "b",  "c",     "t_end",   "n_points", "max_terms", "rel_tol"};
  return keys;
}

double number(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError("config: missing field '" + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError("config: field '" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError("config: field '" + key + "' must be finite");
  return x;
}

long long integer(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError("config: missing field '" + key + "'");
  const json& v = doc.at(key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isfinite(x) && x == std::floor(x)) return static_cast<long long>(x);
  }
  throw ConfigError("config: field '" + key + "' must be an integer");
}

double positive(const json& doc, const std::string& key) {
  const double x = number(doc, key);
  if (!(x > 0.0)) throw ConfigError("config: field '" + key + "' must be positive");
  return x;
}

}  // namespace

JobConfig parse_job_config(const std::string& json_text, const SeriesControl& defaults) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
  for (const auto& item : doc.items())
    if (!known_keys().contains(item.key()))
      throw ConfigError("config: unknown field '" + item.key() + "'");

  JobConfig cfg;
  const long long theorem = integer(doc, "theorem");
  if (theorem < 1 || theorem > 3) throw ConfigError("config: field 'theorem' must be 1, 2 or 3");
  KineticProblem& p = cfg.problem;
  p.variant = static_cast<Variant>(theorem);
  p.n0 = positive(doc, "n0");
  p.d = positive(doc, "d");
  p.nu = positive(doc, "nu");
  if (p.variant == Variant::Theorem3) {
    p.a = positive(doc, "a");
    if (p.a == p.d) throw ConfigError("config: field 'a' must differ from 'd' for theorem 3");
  } else {
    p.a = doc.contains("a") ? number(doc, "a") : p.d;
  }
  p.params.k = positive(doc, "k");
  p.params.gamma = positive(doc, "gamma");
  p.params.lambda = positive(doc, "lambda");
  p.params.mu = positive(doc, "mu");
  p.params.b = number(doc, "b");
  p.params.c = number(doc, "c");

  cfg.t_end = positive(doc, "t_end");
  const long long n_points = integer(doc, "n_points");
  if (n_points < 1 || n_points > 10'000'000)
    throw ConfigError("config: field 'n_points' must be between 1 and 10000000");
  cfg.n_points = static_cast<int>(n_points);

  cfg.control = defaults;
  if (doc.contains("max_terms")) {
    const long long m = integer(doc, "max_terms");
    if (m < 1 || m > 1'000'000) throw ConfigError("config: field 'max_terms' must be positive");
    cfg.control.max_terms = static_cast<int>(m);
  }
  if (doc.contains("rel_tol")) {
    const double tol = number(doc, "rel_tol");
    if (!(tol > 0.0 && tol < 1.0)) throw ConfigError("config: field 'rel_tol' must lie in (0, 1)");
    cfg.control.rel_tol = tol;
  }

  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

JobConfig load_job_config(const std::filesystem::path& path, const SeriesControl& defaults) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_config(buf.str(), defaults);
}

SeriesControl default_series_control() {
  SeriesControl ctl;
  if (const char* env = std::getenv("KKINETICS_MAX_TERMS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1'000'000)
      throw ConfigError(std::string("KKINETICS_MAX_TERMS must be a positive integer, got '") +
                        env + "'");
    ctl.max_terms = static_cast<int>(v);
  }
  return ctl;
}

}  // namespace kkinetics
