#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "edp/potential.hpp"

using edp::ParameterProfile;
using edp::ScarfPotential;

namespace {

ScarfPotential example_linear() {
  return {ParameterProfile::linear(1.0), ParameterProfile::constant(1.5)};
}

ScarfPotential example_inverse() {
  return {ParameterProfile::inverse_power(1.0), ParameterProfile::constant(1.0)};
}

}  // namespace

TEST_CASE("profile evaluation and derivatives") {
  CHECK(edp::eval_profile(ParameterProfile::constant(1.5), 7.0) == 1.5);
  CHECK(edp::eval_profile(ParameterProfile::linear(2.0), 3.0) == 6.0);
  CHECK(edp::eval_profile(ParameterProfile::inverse_power(1.0), -0.5) == 2.0);
  CHECK(edp::eval_profile_derivative(ParameterProfile::constant(1.5), 7.0) == 0.0);
  CHECK(edp::eval_profile_derivative(ParameterProfile::linear(2.0), 3.0) == 2.0);
  CHECK(edp::eval_profile_derivative(ParameterProfile::inverse_power(1.0), -0.5) ==
        doctest::Approx(4.0));
  CHECK_THROWS_AS(edp::eval_profile(ParameterProfile::inverse_power(1.0), 0.0),
                  edp::DomainError);
}

TEST_CASE("profile derivative agrees with finite differences") {
  const double h = 1e-6;
  for (const auto& p : {ParameterProfile::linear(0.7),
                        ParameterProfile::inverse_power(2.5)}) {
    for (double E : {-2.0, -0.4, 1.3, 5.0}) {
      const double fd =
          (edp::eval_profile(p, E + h) - edp::eval_profile(p, E - h)) / (2.0 * h);
      CHECK(edp::eval_profile_derivative(p, E) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
}

TEST_CASE("scarf potential constructor validation") {
  CHECK_THROWS_AS(ScarfPotential(ParameterProfile::constant(0.0),
                                 ParameterProfile::constant(1.0)),
                  edp::DomainError);
  CHECK_THROWS_AS(ScarfPotential(ParameterProfile::linear(0.0),
                                 ParameterProfile::constant(1.0)),
                  edp::DomainError);
  CHECK_THROWS_AS(ScarfPotential(ParameterProfile::inverse_power(-2.0),
                                 ParameterProfile::constant(1.0)),
                  edp::DomainError);
  CHECK_NOTHROW(ScarfPotential(ParameterProfile::constant(2.0),
                               ParameterProfile::linear(0.5)));
}

TEST_CASE("potential evaluation against the defining combination") {
  const auto V = example_linear();
  for (double x : {-3.0, -0.2, 0.0, 1.7}) {
    for (double E : {0.8, 2.5}) {
      const double want =
          -E / std::cosh(x) + 1.5 * std::tanh(x) + E;  // lambda(E) = E here
      CHECK(edp::eval_potential(V, x, E) == doctest::Approx(want).epsilon(1e-15));
    }
  }
}

TEST_CASE("norm weight equals alpha sech for the linear profile") {
  const auto V = example_linear();
  for (int i = 0; i < 100; ++i) {
    const double x = -8.0 + 16.0 * i / 99.0;
    CHECK(std::abs(edp::norm_weight(V, x, 2.3) - 1.0 / std::cosh(x)) < 1e-12);
  }
}

TEST_CASE("norm weight equals the energy derivative of the potential") {
  const double h = 1e-6;
  const auto check_fd = [&](const ScarfPotential& V, double x, double E) {
    const double fd = 1.0 - (edp::eval_potential(V, x, E + h) -
                             edp::eval_potential(V, x, E - h)) /
                                (2.0 * h);
    CHECK(edp::norm_weight(V, x, E) == doctest::Approx(fd).epsilon(1e-7));
  };
  check_fd(example_linear(), 0.7, 2.0);
  check_fd(example_inverse(), -1.3, -0.3);
  check_fd({ParameterProfile::linear(1.0), ParameterProfile::linear(0.4)}, 0.5, 2.0);
}

TEST_CASE("constant profiles give vanishing norm weight") {
  const ScarfPotential V{ParameterProfile::constant(2.0),
                         ParameterProfile::constant(0.5)};
  CHECK(edp::norm_weight(V, 1.1, 3.0) == doctest::Approx(0.0));
}

TEST_CASE("orthogonality weight definition and degenerate guard") {
  const auto V = example_linear();
  const double Em = 2.0, En = 3.5, x = 0.8;
  const double want = 1.0 - (edp::eval_potential(V, x, Em) -
                             edp::eval_potential(V, x, En)) /
                                (Em - En);
  CHECK(edp::ortho_weight(V, x, Em, En) == doctest::Approx(want).epsilon(1e-15));
  CHECK_THROWS_AS(edp::ortho_weight(V, x, 2.0, 2.0 + 1e-14), edp::DomainError);
}

TEST_CASE("orthogonality weight converges to the norm weight") {
  const auto V = example_inverse();
  const double E = -0.3, x = 0.4;
  CHECK(edp::ortho_weight(V, x, E + 1e-7, E) ==
        doctest::Approx(edp::norm_weight(V, x, E)).epsilon(1e-6));
}

TEST_CASE("sign condition over the profile set") {
  CHECK(edp::check_sign_condition(example_linear()).admissible);
  CHECK(edp::check_sign_condition(example_inverse()).admissible);

  const ScarfPotential mu_varying{ParameterProfile::linear(1.0),
                                  ParameterProfile::linear(0.5)};
  const auto r1 = edp::check_sign_condition(mu_varying);
  CHECK(r1.lambda_increasing);
  CHECK_FALSE(r1.mu_constant);
  CHECK_FALSE(r1.admissible);

  const ScarfPotential lambda_const{ParameterProfile::constant(2.0),
                                    ParameterProfile::constant(0.5)};
  const auto r2 = edp::check_sign_condition(lambda_const);
  CHECK_FALSE(r2.lambda_increasing);
  CHECK(r2.mu_constant);
  CHECK_FALSE(r2.admissible);
}

TEST_CASE("json round-trips") {
  for (const auto& p : {ParameterProfile::constant(-1.5),
                        ParameterProfile::linear(2.0),
                        ParameterProfile::inverse_power(0.75)}) {
    const auto back = edp::profile_from_json(edp::profile_to_json(p));
    CHECK(back.kind == p.kind);
    CHECK(back.coeff == p.coeff);
  }
  const auto V = example_inverse();
  const auto back = edp::scarf_from_json(edp::scarf_to_json(V));
  CHECK(back.lambda_profile.kind == V.lambda_profile.kind);
  CHECK(back.mu_profile.coeff == V.mu_profile.coeff);

  CHECK_THROWS_AS(
      edp::profile_from_json(nlohmann::json{{"kind", "quadratic"}, {"alpha", 1.0}}),
      edp::DomainError);
}
