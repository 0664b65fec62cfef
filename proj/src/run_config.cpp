#include "edp/run_config.hpp"

#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace edp {

RunConfig run_config_from_json(const nlohmann::json& j) {
  try {
    RunConfig cfg{scarf_from_json(j.at("potential")), 0.0, 1, 0, {}, {}, {}};
    cfg.k_y = j.at("k_y").get<double>();
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<int>();
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
    if (j.contains("grid")) {
      const auto& g = j["grid"];
      if (g.contains("x_min")) cfg.grid.x_min = g["x_min"].get<double>();
      if (g.contains("x_max")) cfg.grid.x_max = g["x_max"].get<double>();
      if (g.contains("points")) cfg.grid.points = g["points"].get<int>();
    }
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      if (t.contains("quad_tol")) cfg.tolerances.quad_tol = t["quad_tol"].get<double>();
      if (t.contains("ode_rel_tol")) {
        cfg.tolerances.ode_rel_tol = t["ode_rel_tol"].get<double>();
      }
    }
    if (j.contains("output")) {
      const auto& o = j["output"];
      if (o.contains("format")) cfg.output.format = o["format"].get<std::string>();
      if (o.contains("path")) cfg.output.path = o["path"].get<std::string>();
    }

    if (cfg.grid.points < 2) throw ConfigError("config: grid.points must be >= 2");
    if (!(cfg.grid.x_min < cfg.grid.x_max)) {
      throw ConfigError("config: grid.x_min must be below grid.x_max");
    }
    if (cfg.epsilon != 1 && cfg.epsilon != -1) {
      throw ConfigError("config: epsilon must be +1 or -1");
    }
    if (cfg.k_y == 0.0) throw ConfigError("config: k_y must be nonzero");
    if (cfg.n_max < 0) throw ConfigError("config: n_max must be nonnegative");
    if (cfg.output.format != "csv" && cfg.output.format != "json") {
      throw ConfigError("config: output.format must be 'csv' or 'json'");
    }
    return cfg;
  } catch (const ConfigError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return run_config_from_json(j);
}

void apply_overrides(RunConfig& cfg, const ConfigOverrides& o) {
  if (o.k_y) cfg.k_y = *o.k_y;
  if (o.epsilon) cfg.epsilon = *o.epsilon;
  if (o.n_max) cfg.n_max = *o.n_max;
  if (o.out_path) cfg.output.path = *o.out_path;
  if (cfg.epsilon != 1 && cfg.epsilon != -1) {
    throw ConfigError("config: epsilon must be +1 or -1");
  }
  if (cfg.k_y == 0.0) throw ConfigError("config: k_y must be nonzero");
  if (cfg.n_max < 0) throw ConfigError("config: n_max must be nonnegative");
}

std::vector<int> parse_level_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      if (lo < 0 || hi < lo) throw ConfigError("levels: bad range '" + text + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
      return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      const int n = std::stoi(text.substr(pos, comma - pos));
      if (n < 0) throw ConfigError("levels: negative index in '" + text + "'");
      out.push_back(n);
      pos = comma + 1;
    }
  } catch (const std::logic_error&) {
    throw ConfigError("levels: cannot parse '" + text + "'");
  }
  return out;
}

}  // namespace edp
