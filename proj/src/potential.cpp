#include "edp/potential.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace edp {

double eval_profile(const ParameterProfile& p, double E) {
  switch (p.kind) {
    case ProfileKind::Constant:
      return p.coeff;
    case ProfileKind::Linear:
      return p.coeff * E;
    case ProfileKind::InversePower:
      if (E == 0.0) throw DomainError("profile: inverse-power is undefined at E = 0");
      return -p.coeff / E;
  }
  throw Error("profile: unknown kind");
}

double eval_profile_derivative(const ParameterProfile& p, double E) {
  switch (p.kind) {
    case ProfileKind::Constant:
      return 0.0;
    case ProfileKind::Linear:
      return p.coeff;
    case ProfileKind::InversePower:
      if (E == 0.0) throw DomainError("profile: inverse-power is undefined at E = 0");
      return p.coeff / (E * E);
  }
  throw Error("profile: unknown kind");
}

ScarfPotential::ScarfPotential(ParameterProfile lambda, ParameterProfile mu)
    : lambda_profile(lambda), mu_profile(mu) {
  if (lambda.kind == ProfileKind::Constant && lambda.coeff == 0.0) {
    throw DomainError("ScarfPotential: lambda must be nonzero");
  }
  if (lambda.kind != ProfileKind::Constant && lambda.coeff <= 0.0) {
    throw DomainError("ScarfPotential: lambda profile requires alpha > 0");
  }
}

double eval_potential(const ScarfPotential& V, double x, double E) {
  const double sech = 1.0 / std::cosh(x);
  return -eval_profile(V.lambda_profile, E) * sech +
         eval_profile(V.mu_profile, E) * std::tanh(x) + E;
}

double norm_weight(const ScarfPotential& V, double x, double E) {
  const double sech = 1.0 / std::cosh(x);
  return eval_profile_derivative(V.lambda_profile, E) * sech -
         eval_profile_derivative(V.mu_profile, E) * std::tanh(x);
}

double ortho_weight(const ScarfPotential& V, double x, double Em, double En) {
  const double scale = std::max({std::abs(Em), std::abs(En), 1.0});
  if (std::abs(Em - En) < 1e-12 * scale) {
    throw DomainError("ortho_weight: energies degenerate, use norm_weight");
  }
  return 1.0 - (eval_potential(V, x, Em) - eval_potential(V, x, En)) / (Em - En);
}

SignConditionReport check_sign_condition(const ScarfPotential& V) {
  SignConditionReport r;
  // Linear(alpha>0): lambda' = alpha > 0 everywhere.
  // InversePower(alpha>0): lambda' = alpha/E^2 > 0 on each half-line.
  // Constant: lambda' = 0, strict positivity fails.
  const auto& lp = V.lambda_profile;
  r.lambda_increasing = lp.kind != ProfileKind::Constant && lp.coeff > 0.0;
  r.mu_constant = V.mu_profile.kind == ProfileKind::Constant;
  r.admissible = r.lambda_increasing && r.mu_constant;
  return r;
}

ParameterProfile profile_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ParameterProfile::constant(j.at("value").get<double>());
  if (kind == "linear") return ParameterProfile::linear(j.at("alpha").get<double>());
  if (kind == "inverse") return ParameterProfile::inverse_power(j.at("alpha").get<double>());
  throw DomainError("profile: unknown kind '" + kind + "'");
}

nlohmann::json profile_to_json(const ParameterProfile& p) {
  switch (p.kind) {
    case ProfileKind::Constant:
      return {{"kind", "constant"}, {"value", p.coeff}};
    case ProfileKind::Linear:
      return {{"kind", "linear"}, {"alpha", p.coeff}};
    case ProfileKind::InversePower:
      return {{"kind", "inverse"}, {"alpha", p.coeff}};
  }
  throw Error("profile: unknown kind");
}

ScarfPotential scarf_from_json(const nlohmann::json& j) {
  return {profile_from_json(j.at("lambda")), profile_from_json(j.at("mu"))};
}

nlohmann::json scarf_to_json(const ScarfPotential& V) {
  return {{"lambda", profile_to_json(V.lambda_profile)},
          {"mu", profile_to_json(V.mu_profile)}};
}

}  // namespace edp
