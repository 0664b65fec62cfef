#include "edp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edp {

QuantumNumbers::QuantumNumbers(int epsilon_, int n_, double k_y_)
    : epsilon(epsilon_), n(n_), k_y(k_y_) {
  if (epsilon != 1 && epsilon != -1) {
    throw DomainError("QuantumNumbers: epsilon must be +1 or -1");
  }
  if (n < 0) throw DomainError("QuantumNumbers: n must be nonnegative");
  if (k_y == 0.0) throw DomainError("QuantumNumbers: k_y must be nonzero");
}

double quantization_residual(const ScarfPotential& V, const QuantumNumbers& q,
                             double E) {
  const double mu = eval_profile(V.mu_profile, E);
  if (std::abs(q.k_y) < std::abs(mu)) {
    throw DomainError("quantization_residual: |k_y| < |mu(E)|");
  }
  const double kappa = std::sqrt(q.k_y * q.k_y - mu * mu);
  const double lambda = eval_profile(V.lambda_profile, E);
  return 0.5 - q.epsilon * lambda + kappa + q.n;
}

double root_find_energy(const ScarfPotential& V, const QuantumNumbers& q,
                        std::pair<double, double> bracket) {
  auto g = [&](double E) { return quantization_residual(V, q, E); };

  double a = bracket.first, b = bracket.second;
  double fa = g(a), fb = g(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    throw SolverError("root_find_energy: no sign change over the bracket");
  }

  const double residual_tol = 1e-12 * (1.0 + q.n);
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (fb * fc > 0.0) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double width_tol = 0.5 * 1e-13 * (1.0 + std::abs(b));
    const double xm = 0.5 * (c - b);
    if ((std::abs(xm) <= width_tol && std::abs(fb) <= residual_tol) || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= width_tol && std::abs(fa) > std::abs(fb)) {
      // secant / inverse quadratic step
      const double s = fb / fa;
      double p, qd;
      if (a == c) {
        p = 2.0 * xm * s;
        qd = 1.0 - s;
      } else {
        const double r1 = fa / fc, r2 = fb / fc;
        p = s * (2.0 * xm * r1 * (r1 - r2) - (b - a) * (r2 - 1.0));
        qd = (r1 - 1.0) * (r2 - 1.0) * (s - 1.0);
      }
      if (p > 0.0) qd = -qd;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * qd - std::abs(width_tol * qd), std::abs(e * qd))) {
        e = d;
        d = p / qd;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > width_tol) {
      b += d;
    } else {
      b += (xm > 0.0 ? width_tol : -width_tol);
    }
    fb = g(b);
  }
  throw ConvergenceError("root_find_energy: did not converge in 200 iterations");
}

EnergyLevel validate_level(const ScarfPotential& V, EnergyLevel level) {
  const double mu = eval_profile(V.mu_profile, level.E);
  const double lambda = eval_profile(V.lambda_profile, level.E);
  level.valid.wavenumber_ok = std::abs(level.k_y) >= std::abs(mu);
  const double ksq = level.k_y * level.k_y - mu * mu;
  level.kappa = ksq > 0.0 ? std::sqrt(ksq) : 0.0;
  if (level.epsilon == 1) {
    level.valid.lambda_condition_ok = lambda > level.n + 0.5;
  } else {
    level.valid.lambda_condition_ok = lambda < -level.n - 0.5;
  }
  level.valid.sign_condition_ok = check_sign_condition(V).admissible;
  return level;
}

namespace {

// Default scan range for the root-finding fallback. Uses kappa <= |k_y| to
// bound |lambda(E_root)| = n + 1/2 + kappa. Only the mu-constant profile
// combinations have a decidable default; everything else needs a
// caller-supplied bracket through root_find_energy.
std::pair<double, double> default_scan_range(const ScarfPotential& V, int epsilon,
                                             double k_y, int n) {
  if (V.mu_profile.kind != ProfileKind::Constant) {
    throw SolverError("solve_energies: no default bracket for non-constant mu; "
                      "use root_find_energy with an explicit bracket");
  }
  const double alpha = V.lambda_profile.coeff;
  const double bound_hi = (n + 0.5 + std::abs(k_y)) / alpha;
  const double bound_lo = (n + 0.5) / alpha;
  if (V.lambda_profile.kind == ProfileKind::Linear) {
    // root at E = eps (n + 1/2 + kappa) / alpha
    double lo = 0.5 * bound_lo, hi = 1.5 * bound_hi;
    if (epsilon < 0) std::swap(lo, hi), lo = -lo, hi = -hi;
    return {std::min(lo, hi), std::max(lo, hi)};
  }
  if (V.lambda_profile.kind == ProfileKind::InversePower) {
    // root at E = -eps alpha / (n + 1/2 + kappa)
    const double lo = alpha / ((n + 0.5 + std::abs(k_y)) * 1.5);
    const double hi = alpha / ((n + 0.5) * 0.5 + 0.25);
    if (epsilon > 0) return {-hi, -lo};
    return {lo, hi};
  }
  throw SolverError("solve_energies: no default bracket for this profile");
}

EnergyLevel solve_one_by_bracketing(const ScarfPotential& V, int epsilon,
                                    double k_y, int n) {
  const QuantumNumbers q(epsilon, n, k_y);
  const auto [lo, hi] = default_scan_range(V, epsilon, k_y, n);
  constexpr int kScan = 64;
  double prev_x = lo;
  double prev_g;
  bool have_prev = false;
  try {
    prev_g = quantization_residual(V, q, prev_x);
    have_prev = true;
  } catch (const DomainError&) {
  }
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    double gx;
    try {
      gx = quantization_residual(V, q, x);
    } catch (const DomainError&) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev_g * gx <= 0.0) {
      EnergyLevel level;
      level.E = root_find_energy(V, q, {prev_x, x});
      level.n = n;
      level.epsilon = epsilon;
      level.k_y = k_y;
      return validate_level(V, level);
    }
    prev_x = x;
    prev_g = gx;
    have_prev = true;
  }
  throw SolverError("solve_energies: bracketing failure for n = " + std::to_string(n));
}

}  // namespace

std::vector<EnergyLevel> solve_energies(const ScarfPotential& V, int epsilon,
                                        double k_y, int n_max) {
  if (epsilon != 1 && epsilon != -1) {
    throw DomainError("solve_energies: epsilon must be +1 or -1");
  }
  if (k_y == 0.0) throw DomainError("solve_energies: k_y must be nonzero");
  if (n_max < 0) throw DomainError("solve_energies: n_max must be nonnegative");

  const bool mu_const = V.mu_profile.kind == ProfileKind::Constant;
  if (V.lambda_profile.kind == ProfileKind::Constant && mu_const) {
    throw SolverError("solve_energies: residual is energy-independent, no spectrum");
  }

  std::vector<EnergyLevel> levels;
  levels.reserve(n_max + 1);

  const bool closed_linear =
      V.lambda_profile.kind == ProfileKind::Linear && mu_const && epsilon == 1;
  const bool closed_inverse =
      V.lambda_profile.kind == ProfileKind::InversePower && mu_const && epsilon == 1;

  if (closed_linear || closed_inverse) {
    const double beta = V.mu_profile.coeff;
    if (std::abs(k_y) < std::abs(beta)) {
      throw DomainError("solve_energies: |k_y| < |beta|, no real decay rate");
    }
    const double alpha = V.lambda_profile.coeff;
    const double kappa = std::sqrt(k_y * k_y - beta * beta);
    for (int n = 0; n <= n_max; ++n) {
      EnergyLevel level;
      level.E = closed_linear ? (n + 0.5 + kappa) / alpha
                              : -2.0 * alpha / (2.0 * n + 1.0 + 2.0 * kappa);
      level.n = n;
      level.epsilon = epsilon;
      level.k_y = k_y;
      levels.push_back(validate_level(V, level));
    }
    return levels;
  }

  for (int n = 0; n <= n_max; ++n) {
    levels.push_back(solve_one_by_bracketing(V, epsilon, k_y, n));
  }
  return levels;
}

}  // namespace edp
