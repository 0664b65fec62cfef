#pragma once

#include <nlohmann/json_fwd.hpp>

#include "edp/types.hpp"

namespace edp {

enum class ProfileKind { Constant, Linear, InversePower };

// One coefficient function of the energy: a constant, alpha*E, or -alpha/E.
// The closed enumeration keeps the sign condition and the closed-form
// spectra symbolically decidable.
struct ParameterProfile {
  ProfileKind kind = ProfileKind::Constant;
  double coeff = 0.0;  // value for Constant, alpha otherwise

  static ParameterProfile constant(double value) {
    return {ProfileKind::Constant, value};
  }
  static ParameterProfile linear(double alpha) {
    return {ProfileKind::Linear, alpha};
  }
  static ParameterProfile inverse_power(double alpha) {
    return {ProfileKind::InversePower, alpha};
  }
};

double eval_profile(const ParameterProfile& p, double E);
double eval_profile_derivative(const ParameterProfile& p, double E);

// V(x,E) = -lambda(E) sech(x) + mu(E) tanh(x) + E.
struct ScarfPotential {
  ParameterProfile lambda_profile;
  ParameterProfile mu_profile;

  // Validates that lambda is admissible as a coefficient: nonzero if
  // constant, alpha > 0 for the energy-dependent kinds.
  ScarfPotential(ParameterProfile lambda, ParameterProfile mu);
};

double eval_potential(const ScarfPotential& V, double x, double E);

// 1 - dV/dE = lambda'(E) sech(x) - mu'(E) tanh(x), the modified-norm weight.
double norm_weight(const ScarfPotential& V, double x, double E);

// 1 - (V(x,Em) - V(x,En)) / (Em - En), the orthogonality weight.
// Throws DomainError when |Em-En| < 1e-12 max(|Em|,|En|,1); use norm_weight
// for the m -> n limit.
double ortho_weight(const ScarfPotential& V, double x, double Em, double En);

struct SignConditionReport {
  bool lambda_increasing = false;
  bool mu_constant = false;
  bool admissible = false;
};

// Decides lambda'(E) > 0 and mu = constant symbolically over the profile set.
SignConditionReport check_sign_condition(const ScarfPotential& V);

// JSON schema: {"kind": "linear"|"inverse"|"constant", "alpha"|"value": x}.
ParameterProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const ParameterProfile& p);

// {"lambda": {...}, "mu": {...}}
ScarfPotential scarf_from_json(const nlohmann::json& j);
nlohmann::json scarf_to_json(const ScarfPotential& V);

}  // namespace edp
