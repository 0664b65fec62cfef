#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "edp/potential.hpp"

namespace edp {

// A malformed or inconsistent run configuration (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

struct GridSpec {
  double x_min = -8.0;
  double x_max = 8.0;
  int points = 401;
};

struct ToleranceSpec {
  double quad_tol = 1e-10;
  double ode_rel_tol = 1e-10;
};

struct OutputSpec {
  std::string format = "csv";  // "csv" or "json"
  std::string path;            // empty means stdout
};

struct RunConfig {
  ScarfPotential potential;
  double k_y = 0.0;
  int epsilon = 1;
  int n_max = 0;
  GridSpec grid;
  ToleranceSpec tolerances;
  OutputSpec output;
};

// Parses and validates the config JSON; throws ConfigError on schema or
// invariant violations (grid.points >= 2, x_min < x_max, epsilon in {+1,-1},
// k_y != 0).
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

// Flag overrides applied on top of the file values.
struct ConfigOverrides {
  std::optional<double> k_y;
  std::optional<int> epsilon;
  std::optional<int> n_max;
  std::optional<std::string> out_path;
};
void apply_overrides(RunConfig& cfg, const ConfigOverrides& o);

// "0,1,2" or "0..3" -> list of level indices.
std::vector<int> parse_level_list(const std::string& text);

}  // namespace edp
