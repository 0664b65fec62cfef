#pragma once

#include <functional>

#include "edp/wavefunction.hpp"

namespace edp {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double half_width = 0.0;  // truncation half-width L
  long evaluations = 0;
};

struct ComplexQuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  double half_width = 0.0;
  long evaluations = 0;
};

// Whole-line integral of an integrand bounded by C e^{-2 kappa |x|} times a
// polynomial: truncates at L = (ln(1/tol) + 10) / (2 kappa), then applies
// adaptive Gauss-Kronrod 15(7) subdivision on [-L, L] to absolute tolerance
// tol. The a-priori tail bound is added to the error estimate. Throws
// ConvergenceError past a budget of 1e6 evaluations.
QuadratureResult integrate_decaying(const std::function<double(double)>& f,
                                    double kappa, double tol);
ComplexQuadratureResult integrate_decaying_complex(
    const std::function<Complex(double)>& f, double kappa, double tol);

// N(psi_n) = integral of [1 - dV/dE] (|psi_+|^2 + |psi_-|^2). Can be negative
// when the sign condition is violated; the value is returned either way.
QuadratureResult modified_norm(const BoundState& s, const ScarfPotential& V,
                               double tol, double normalization = 1.0);

// Overlap of two levels under the orthogonality weight
// 1 - (V(x,Em)-V(x,En))/(Em-En); vanishes for m != n on a shared branch.
ComplexQuadratureResult ortho_overlap(const BoundState& sm, const BoundState& sn,
                                      const ScarfPotential& V, double tol);

// Pointwise magnitude of the modified continuity identity
//   -i (En - Em) P + i [V(x,En) - V(x,Em)] P + dJx/dx
// with P and Jx the spinor bilinears and dJx/dx by 4th-order central
// differences. The time derivative is analytic in the stationary phase.
double continuity_residual(const BoundState& sm, const BoundState& sn,
                           const ScarfPotential& V, double x);

}  // namespace edp
