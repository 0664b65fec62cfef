#include "edp/wavefunction.hpp"

#include <cmath>

#include "edp/specfun.hpp"

namespace edp {

namespace {

constexpr Complex kI{0.0, 1.0};

// Complex coefficient of psi1 in the governing equation.
Complex ode_coefficient(double lambda, double mu, double k_y, double x) {
  const double sech = 1.0 / std::cosh(x);
  const double tanh = std::tanh(x);
  const Complex sech2_term = lambda * lambda + kI * mu - mu * mu;
  const Complex cross_term = kI * lambda - 2.0 * lambda * mu;
  return -k_y * k_y + mu * mu + sech * sech * sech2_term +
         sech * tanh * cross_term;
}

}  // namespace

BoundState build_bound_state(const ScarfPotential& V, const EnergyLevel& level,
                             const QuantumNumbers& q, bool override_invalid) {
  if (!level.valid.all() && !override_invalid) {
    throw InvalidLevelError("build_bound_state: level has failed validity flags");
  }
  BoundState s;
  s.level = level;
  s.n = q.n;
  s.epsilon = q.epsilon;
  s.k_y = q.k_y;
  s.lambda_E = eval_profile(V.lambda_profile, level.E);
  s.mu_E = eval_profile(V.mu_profile, level.E);
  const double eps = static_cast<double>(q.epsilon);
  const Complex plus{1.0 + 2.0 * s.lambda_E, 2.0 * s.mu_E};    // 1 + 2l + 2im
  const Complex minus{-1.0 + 2.0 * s.lambda_E, -2.0 * s.mu_E}; // -1 + 2l - 2im
  s.p = 0.25 - 0.25 * eps * plus;
  s.q = 0.25 - 0.25 * eps * minus;
  s.A = -0.5 * eps * plus;
  s.B = 0.5 * eps * Complex{1.0 - 2.0 * s.lambda_E, 2.0 * s.mu_E};
  return s;
}

Complex eval_psi1(const BoundState& s, double x) {
  const double sh = std::sinh(x);
  const Complex w1{1.0, -sh};
  const Complex w2{1.0, sh};
  const Complex z{0.0, sh};
  return std::pow(w1, s.p) * std::pow(w2, s.q) *
         specfun::jacobi_poly(s.n, s.A, s.B, z);
}

Complex eval_psi1_prime(const BoundState& s, double x) {
  const double sh = std::sinh(x);
  const double ch = std::cosh(x);
  const Complex w1{1.0, -sh};
  const Complex w2{1.0, sh};
  const Complex z{0.0, sh};
  const Complex P = specfun::jacobi_poly(s.n, s.A, s.B, z);
  const Complex dP = specfun::jacobi_poly_derivative(s.n, s.A, s.B, z);
  const Complex f1 = std::pow(w1, s.p);
  const Complex f2 = std::pow(w2, s.q);
  return ch * (-kI * s.p * std::pow(w1, s.p - 1.0) * f2 * P +
               kI * s.q * f1 * std::pow(w2, s.q - 1.0) * P + kI * f1 * f2 * dP);
}

Complex eval_psi2(const BoundState& s, const ScarfPotential& V, double x) {
  const double vme = eval_potential(V, x, s.level.E) - s.level.E;
  return (eval_psi1_prime(s, x) + kI * vme * eval_psi1(s, x)) / s.k_y;
}

SpinorSample eval_spinor(const BoundState& s, const ScarfPotential& V, double x,
                         double normalization) {
  if (!(normalization > 0.0)) {
    throw DomainError("eval_spinor: normalization must be positive");
  }
  SpinorSample out;
  out.x = x;
  out.psi1 = normalization * eval_psi1(s, x);
  out.psi2 = normalization * eval_psi2(s, V, x);
  out.psi_plus = out.psi1 + out.psi2;
  out.psi_minus = out.psi1 - out.psi2;
  out.density_plus = std::norm(out.psi_plus);
  out.density_minus = std::norm(out.psi_minus);
  return out;
}

Complex ode_residual_psi1(const BoundState& s, const ScarfPotential& V, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  const Complex d2 = (-eval_psi1_prime(s, x + 2.0 * h) +
                      8.0 * eval_psi1_prime(s, x + h) -
                      8.0 * eval_psi1_prime(s, x - h) +
                      eval_psi1_prime(s, x - 2.0 * h)) /
                     (12.0 * h);
  const double lambda = eval_profile(V.lambda_profile, s.level.E);
  const double mu = eval_profile(V.mu_profile, s.level.E);
  const Complex Q = ode_coefficient(lambda, mu, s.k_y, x);
  return d2 + Q * eval_psi1(s, x);
}

Complex general_solution_psi1(const ScarfPotential& V, double E, double k_y,
                              Complex c1, Complex c2, double x) {
  const double lambda = eval_profile(V.lambda_profile, E);
  const double mu = eval_profile(V.mu_profile, E);
  // Principal square roots of the squared parameter combinations.
  const Complex t1{-1.0 + 2.0 * lambda, -2.0 * mu};
  const Complex t2{1.0 + 2.0 * lambda, 2.0 * mu};
  const Complex s1 = std::sqrt(t1 * t1);
  const Complex s2 = std::sqrt(t2 * t2);
  const Complex kap = std::sqrt(Complex{k_y * k_y - mu * mu, 0.0});
  const Complex a = 0.5 - 0.25 * s1 - 0.25 * s2 + kap;
  const Complex b = 0.5 - 0.25 * s1 - 0.25 * s2 - kap;
  const Complex c = 1.0 - 0.5 * s2;

  const double sh = std::sinh(x);
  const Complex w1{1.0, -sh};
  const Complex w2{1.0, sh};
  const Complex u{0.5, -0.5 * sh};

  Complex out{0.0, 0.0};
  if (c1 != Complex{0.0, 0.0}) {
    out += c1 * std::pow(w1, 0.5 * c - 0.25) *
           std::pow(w2, 0.5 * (a + b - c) + 0.25) *
           specfun::hyp2f1_series(a, b, c, u);
  }
  if (c2 != Complex{0.0, 0.0}) {
    out += c2 * std::pow(w1, 0.75 - 0.5 * c) *
           std::pow(w2, 0.25 - 0.5 * (a + b - c)) *
           specfun::hyp2f1_series(1.0 - a, 1.0 - b, 2.0 - c, u);
  }
  return out;
}

}  // namespace edp
