#pragma once

#include <utility>
#include <vector>

#include "edp/wavefunction.hpp"

namespace edp {

struct ShootingConfig {
  double L = 12.0;        // matching half-width; needs L * kappa >= 8
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int scan_points = 500;  // energy-grid resolution for shoot_energies
};

enum class Side { Left, Right };

// Sampled solution of the second-order complex ODE; consistent scale across
// all recorded points (growth renormalization rescales history too).
struct OdeTrace {
  std::vector<double> x;
  std::vector<Complex> u;
  std::vector<Complex> du;
};

// Integrates the governing psi1 equation from x = -L (Left) or x = +L
// (Right) toward 0 with an adaptive Dormand-Prince 5(4) pair, starting on
// the decaying asymptotic mode u = 1, u' = +-kappa. When out_x is empty the
// trace records every accepted step; otherwise exactly the requested
// abscissae (which must lie between the start and 0, ordered along the
// direction of integration) plus the endpoint 0.
OdeTrace integrate_psi1_ode(const ScarfPotential& V, double E, double k_y,
                            Side from_side, const ShootingConfig& cfg,
                            const std::vector<double>& out_x = {});

// W(E) = uL(0) uR'(0) - uL'(0) uR(0) with both traces scaled to |u(0)| = 1;
// vanishes at eigenvalues.
Complex wronskian_mismatch(const ScarfPotential& V, double E, double k_y,
                           const ShootingConfig& cfg);

// Scans |W| over the energy grid, refines local minima by golden-section on
// |W|^2 to bracket width 1e-9 and keeps candidates with |W| < 1e-5.
std::vector<double> shoot_energies(const ScarfPotential& V, double k_y,
                                   std::pair<double, double> E_range,
                                   const ShootingConfig& cfg);

struct CompareReport {
  double max_rel_dev = 0.0;
};

// Matches each one-sided trace to the closed-form psi1 by a complex scale
// fitted at x = 0 and reports the maximum deviation over the trace samples,
// relative to the largest |psi1| seen.
CompareReport compare_states(const BoundState& s, const OdeTrace& left,
                             const OdeTrace& right);

}  // namespace edp
