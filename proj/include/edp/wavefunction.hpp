#pragma once

#include "edp/spectrum.hpp"

namespace edp {

// A solved bound-state level together with the closed-form exponents and
// Jacobi parameters of psi1:
//   psi1(x) = [1 - i sinh x]^p [1 + i sinh x]^q P_n^{(A,B)}(i sinh x)
// with (eps the branch sign, lambda/mu evaluated at the level energy)
//   p = 1/4 - (eps/4)(1 + 2 lambda + 2 i mu)
//   q = 1/4 - (eps/4)(-1 + 2 lambda - 2 i mu)
//   A = -(eps/2)(1 + 2 lambda + 2 i mu)
//   B = +(eps/2)(1 - 2 lambda + 2 i mu)
struct BoundState {
  EnergyLevel level;
  Complex p, q;
  Complex A, B;
  int n = 0;
  int epsilon = 1;
  double k_y = 0.0;
  double lambda_E = 0.0;
  double mu_E = 0.0;
};

struct SpinorSample {
  double x = 0.0;
  Complex psi1, psi2;
  Complex psi_plus, psi_minus;  // psi1 +- psi2
  double density_plus = 0.0;    // |psi_plus|^2
  double density_minus = 0.0;
};

// No normalization is applied here; the modified norm owns the canonical
// scale. Throws InvalidLevelError unless all flags are true or
// override_invalid is set (diagnostic plotting).
BoundState build_bound_state(const ScarfPotential& V, const EnergyLevel& level,
                             const QuantumNumbers& q, bool override_invalid = false);

Complex eval_psi1(const BoundState& s, double x);

// Analytic derivative via product/chain rule on the closed form.
Complex eval_psi1_prime(const BoundState& s, double x);

// psi2 = (1/k_y) { psi1' + i [V(x,E) - E] psi1 }.
Complex eval_psi2(const BoundState& s, const ScarfPotential& V, double x);

SpinorSample eval_spinor(const BoundState& s, const ScarfPotential& V, double x,
                         double normalization);

// Left-hand side of the governing equation
//   psi1'' + { -k_y^2 + mu^2 + sech^2 (lambda^2 + i mu - mu^2)
//            + sech tanh (i lambda - 2 lambda mu) } psi1,
// with psi1'' by 4th-order central differences of the analytic psi1'
// (step 1e-3 max(1,|x|)), keeping the check partly independent of the
// analytic derivative path.
Complex ode_residual_psi1(const BoundState& s, const ScarfPotential& V, double x);

// Two-branch general solution of the governing equation at arbitrary E, with
// the squared complex roots in the hypergeometric parameters taken on the
// principal square-root branch. Series validity needs |x| small enough that
// |(1 - i sinh x)/2| <= 0.8.
Complex general_solution_psi1(const ScarfPotential& V, double E, double k_y,
                              Complex c1, Complex c2, double x);

}  // namespace edp
