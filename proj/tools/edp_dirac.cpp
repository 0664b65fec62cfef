#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "edp/commands.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<double> k_y;
  std::optional<int> epsilon;
  std::optional<int> n_max;
  std::optional<std::string> out_path;
};

void add_common_flags(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--config", f.config_path, "run configuration JSON file")
      ->required();
  cmd.add_option("--k-y", f.k_y, "override transverse wavenumber");
  cmd.add_option("--epsilon", f.epsilon, "override branch sign (+1 or -1)");
  cmd.add_option("--n-max", f.n_max, "override highest level index");
  cmd.add_option("--out", f.out_path, "override output path ('-' for stdout)");
}

edp::RunConfig load(const CommonFlags& f) {
  edp::RunConfig cfg = edp::load_run_config(f.config_path);
  edp::ConfigOverrides o;
  o.k_y = f.k_y;
  o.epsilon = f.epsilon;
  o.n_max = f.n_max;
  o.out_path = f.out_path;
  if (o.out_path && *o.out_path == "-") o.out_path = std::string{};
  edp::apply_overrides(cfg, o);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of the 2D Dirac equation with an "
               "energy-dependent hyperbolic Scarf potential"};
  app.require_subcommand(1);

  CommonFlags spectrum_flags, density_flags, norm_flags, verify_flags;
  bool spectrum_verify = false;
  std::string density_levels = "0", norm_levels = "0";

  CLI::App* spectrum = app.add_subcommand("spectrum", "solve energy levels");
  add_common_flags(*spectrum, spectrum_flags);
  spectrum->add_flag("--verify", spectrum_verify,
                     "cross-check each level against the shooting oracle");

  CLI::App* density = app.add_subcommand("density", "tabulate spinor densities");
  add_common_flags(*density, density_flags);
  density->add_option("--levels", density_levels, "levels, e.g. 0,2 or 0..3");

  CLI::App* norm = app.add_subcommand("norm", "modified norms of levels");
  add_common_flags(*norm, norm_flags);
  norm->add_option("--levels", norm_levels, "levels, e.g. 0,2 or 0..3");

  CLI::App* verify = app.add_subcommand("verify", "run the self-check suite");
  add_common_flags(*verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) {
      return edp::cmd_spectrum(load(spectrum_flags), spectrum_verify, std::cout,
                               std::cerr);
    }
    if (density->parsed()) {
      return edp::cmd_density(load(density_flags),
                              edp::parse_level_list(density_levels), std::cout,
                              std::cerr);
    }
    if (norm->parsed()) {
      return edp::cmd_norm(load(norm_flags), edp::parse_level_list(norm_levels),
                           std::cout, std::cerr);
    }
    return edp::cmd_verify(load(verify_flags), std::cout, std::cerr);
  } catch (const edp::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const edp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
