#pragma once

#include <utility>
#include <vector>

#include "edp/potential.hpp"

namespace edp {

struct QuantumNumbers {
  int epsilon;  // +1 or -1, the branch sign
  int n;        // level index, >= 0
  double k_y;   // transverse wavenumber, nonzero

  QuantumNumbers(int epsilon_, int n_, double k_y_);
};

struct ValidityFlags {
  bool wavenumber_ok = false;        // |k_y| >= |mu(E)|
  bool lambda_condition_ok = false;  // eps=+1: lambda(E) > n+1/2; eps=-1: < -n-1/2
  bool sign_condition_ok = false;    // lambda'(E) > 0 and mu constant

  bool all() const { return wavenumber_ok && lambda_condition_ok && sign_condition_ok; }
};

struct EnergyLevel {
  double E = 0.0;
  int n = 0;
  int epsilon = 1;
  double k_y = 0.0;
  double kappa = 0.0;  // sqrt(k_y^2 - mu(E)^2), exponential decay rate
  ValidityFlags valid;
};

// g(E) = 1/2 - eps*lambda(E) + sqrt(k_y^2 - mu(E)^2) + n; stationary energies
// are its zeros. Throws DomainError when |k_y| < |mu(E)|.
double quantization_residual(const ScarfPotential& V, const QuantumNumbers& q, double E);

// Brent-style bracketing root finder on the quantization residual.
// Converges to |g(E)| < 1e-12 (1+n) with bracket width < 1e-13 (1+|E|).
double root_find_energy(const ScarfPotential& V, const QuantumNumbers& q,
                        std::pair<double, double> bracket);

// Fills all three validity flags and kappa from the level's energy.
EnergyLevel validate_level(const ScarfPotential& V, EnergyLevel level);

// Stationary energies for n = 0..n_max. Uses the closed forms for
// (Linear, Constant) and (InversePower, Constant) profiles on the eps=+1
// branch; otherwise brackets and root-finds each level. Throws SolverError
// when the residual is energy-independent (Constant lambda and mu).
std::vector<EnergyLevel> solve_energies(const ScarfPotential& V, int epsilon,
                                        double k_y, int n_max);

}  // namespace edp
