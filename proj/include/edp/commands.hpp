#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edp/oracle.hpp"
#include "edp/run_config.hpp"
#include "edp/spectrum.hpp"

namespace edp {

// Scan window and resolution for verifying a solved spectrum by shooting:
// brackets levels 0..n_max away from neighbors and profile singularities.
struct ShootingPlan {
  double E_lo = 0.0;
  double E_hi = 0.0;
  int scan_points = 0;
};

ShootingPlan make_shooting_plan(const ScarfPotential& V, int epsilon, double k_y,
                                int n_max);

// Subcommand bodies. Reports go to `out`; diagnostics to `err`. The returned
// value is the process exit code: 0 pass, 1 verification failure. Config and
// solver failures are thrown (ConfigError -> 2, other edp::Error -> 3).
int cmd_spectrum(const RunConfig& cfg, bool verify, std::ostream& out,
                 std::ostream& err);
int cmd_density(const RunConfig& cfg, const std::vector<int>& levels,
                std::ostream& out, std::ostream& err);
int cmd_norm(const RunConfig& cfg, const std::vector<int>& levels,
             std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Lossless decimal formatting shared by every emitter (17 significant
// digits, '.' decimal point).
std::string format_double(double v);

// Reads a spectrum JSON file and re-serializes it with the writer's
// settings; byte-identical output is the round-trip contract.
std::string reemit_spectrum_json(const std::string& path);

}  // namespace edp
