#include "edp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace edp {

namespace {

constexpr Complex kI{0.0, 1.0};

struct State {
  Complex u, du;
};

State operator+(State a, State b) { return {a.u + b.u, a.du + b.du}; }
State operator*(double c, State s) { return {c * s.u, c * s.du}; }

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,      0.0,         500.0 / 1113,
                           125.0 / 192,     -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,          7571.0 / 16695,
                           393.0 / 640,     -92097.0 / 339200, 187.0 / 2100,
                           1.0 / 40};

double kappa_or_throw(const ScarfPotential& V, double E, double k_y) {
  const double mu = eval_profile(V.mu_profile, E);
  const double ksq = k_y * k_y - mu * mu;
  if (!(ksq > 0.0)) {
    throw DomainError("oracle: |k_y| <= |mu(E)|, no decaying asymptotic mode");
  }
  return std::sqrt(ksq);
}

Complex ode_coefficient(double lambda, double mu, double k_y, double x) {
  const double sech = 1.0 / std::cosh(x);
  const double tanh = std::tanh(x);
  return -k_y * k_y + mu * mu +
         sech * sech * (lambda * lambda + kI * mu - mu * mu) +
         sech * tanh * (kI * lambda - 2.0 * lambda * mu);
}

}  // namespace

OdeTrace integrate_psi1_ode(const ScarfPotential& V, double E, double k_y,
                            Side from_side, const ShootingConfig& cfg,
                            const std::vector<double>& out_x) {
  const double kappa = kappa_or_throw(V, E, k_y);
  const double lambda = eval_profile(V.lambda_profile, E);
  const double mu = eval_profile(V.mu_profile, E);

  auto rhs = [&](double x, State y) -> State {
    return {y.du, -ode_coefficient(lambda, mu, k_y, x) * y.u};
  };

  const double dir = from_side == Side::Left ? 1.0 : -1.0;
  double x = -dir * cfg.L;
  State y{Complex{1.0, 0.0}, Complex{dir * kappa, 0.0}};

  OdeTrace trace;
  std::size_t next_out = 0;
  auto record = [&](double xx, const State& s) {
    trace.x.push_back(xx);
    trace.u.push_back(s.u);
    trace.du.push_back(s.du);
  };
  const bool explicit_outputs = !out_x.empty();
  if (!explicit_outputs) record(x, y);
  // Record the start point if it was requested.
  while (explicit_outputs && next_out < out_x.size() &&
         out_x[next_out] * dir <= x * dir + 1e-14) {
    record(x, y);
    ++next_out;
  }

  double h = dir * std::min(0.01, cfg.L / 100.0);
  const double h_min = 1e-13 * cfg.L;
  while (dir * x < 0.0) {
    double target = 0.0;
    if (explicit_outputs && next_out < out_x.size() &&
        dir * out_x[next_out] < 0.0) {
      target = out_x[next_out];
    }
    double h_step = h;
    const bool clamped = dir * (x + h_step) > dir * target;
    if (clamped) h_step = target - x;

    std::array<State, 7> k;
    k[0] = rhs(x, y);
    for (int stage = 1; stage < 7; ++stage) {
      State acc = y;
      for (int j = 0; j < stage; ++j) acc = acc + (h_step * kA[stage][j]) * k[j];
      k[stage] = rhs(x + kC[stage] * h_step, acc);
    }
    State y5 = y, y4 = y;
    for (int stage = 0; stage < 7; ++stage) {
      y5 = y5 + (h_step * kB5[stage]) * k[stage];
      y4 = y4 + (h_step * kB4[stage]) * k[stage];
    }
    const double sc_u = cfg.abs_tol +
                        cfg.rel_tol * std::max(std::abs(y.u), std::abs(y5.u));
    const double sc_du = cfg.abs_tol +
                         cfg.rel_tol * std::max(std::abs(y.du), std::abs(y5.du));
    const double err = std::sqrt(0.5 * (std::norm((y5.u - y4.u) / sc_u) +
                                        std::norm((y5.du - y4.du) / sc_du)));
    const double factor =
        err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
    if (err <= 1.0) {
      x = clamped ? target : x + h_step;
      y = y5;
      if (!explicit_outputs) {
        record(x, y);
      } else {
        while (next_out < out_x.size() && dir * out_x[next_out] <= dir * x + 1e-14) {
          record(x, y);
          ++next_out;
        }
      }
      if (std::abs(y.u) > 1e100) {
        // Rescale the running state and the recorded history together.
        const double s = 1.0 / std::abs(y.u);
        y.u *= s;
        y.du *= s;
        for (auto& v : trace.u) v *= s;
        for (auto& v : trace.du) v *= s;
      }
      // A clamped step must not shrink the adaptive step size.
      if (!clamped) h = h_step * factor;
    } else {
      h = h_step * factor;
      if (std::abs(h) < h_min) {
        throw ConvergenceError("integrate_psi1_ode: step size underflow");
      }
    }
  }
  if (explicit_outputs) {
    // Endpoint x = 0 plus any not-yet-emitted requests collapse onto it.
    while (next_out < out_x.size()) {
      record(x, y);
      ++next_out;
    }
    if (trace.x.empty() || trace.x.back() != x) record(x, y);
  }
  return trace;
}

Complex wronskian_mismatch(const ScarfPotential& V, double E, double k_y,
                           const ShootingConfig& cfg) {
  const OdeTrace left = integrate_psi1_ode(V, E, k_y, Side::Left, cfg, {0.0});
  const OdeTrace right = integrate_psi1_ode(V, E, k_y, Side::Right, cfg, {0.0});
  Complex uL = left.u.back(), duL = left.du.back();
  Complex uR = right.u.back(), duR = right.du.back();
  const double sL = std::max(std::abs(uL), 1e-300);
  const double sR = std::max(std::abs(uR), 1e-300);
  uL /= sL;
  duL /= sL;
  uR /= sR;
  duR /= sR;
  return uL * duR - duL * uR;
}

std::vector<double> shoot_energies(const ScarfPotential& V, double k_y,
                                   std::pair<double, double> E_range,
                                   const ShootingConfig& cfg) {
  const auto [lo, hi] = E_range;
  if (!(hi > lo)) throw DomainError("shoot_energies: empty energy range");
  const int m = std::max(cfg.scan_points, 3);

  auto wmag = [&](double E) -> double {
    return std::abs(wronskian_mismatch(V, E, k_y, cfg));
  };

  std::vector<double> grid(m), w(m);
  std::vector<bool> ok(m, false);
  for (int i = 0; i < m; ++i) {
    grid[i] = lo + (hi - lo) * i / (m - 1);
    try {
      w[i] = wmag(grid[i]);
      ok[i] = true;
    } catch (const Error&) {
      // kappa invalid or singular profile point; skip this sub-range
    }
  }

  std::vector<double> found;
  constexpr double kGolden = 0.6180339887498949;
  for (int i = 1; i + 1 < m; ++i) {
    if (!(ok[i - 1] && ok[i] && ok[i + 1])) continue;
    if (!(w[i] < w[i - 1] && w[i] <= w[i + 1])) continue;
    // Golden-section minimization of |W|^2.
    double a = grid[i - 1], b = grid[i + 1];
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = wmag(x1), f2 = wmag(x2);
    while (b - a > 1e-9) {
      if (f1 * f1 < f2 * f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = wmag(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = wmag(x2);
      }
    }
    const double E = 0.5 * (a + b);
    if (wmag(E) < 1e-5) found.push_back(E);
  }
  std::sort(found.begin(), found.end());
  return found;
}

CompareReport compare_states(const BoundState& s, const OdeTrace& left,
                             const OdeTrace& right) {
  double max_abs_psi = 0.0;
  double max_dev = 0.0;
  for (const OdeTrace* trace : {&left, &right}) {
    if (trace->x.empty()) continue;
    // The matching point x = 0 is the last recorded sample.
    const Complex u0 = trace->u.back();
    const Complex scale = eval_psi1(s, trace->x.back()) / u0;
    for (std::size_t i = 0; i < trace->x.size(); ++i) {
      const Complex exact = eval_psi1(s, trace->x[i]);
      max_abs_psi = std::max(max_abs_psi, std::abs(exact));
      max_dev = std::max(max_dev, std::abs(scale * trace->u[i] - exact));
    }
  }
  CompareReport r;
  r.max_rel_dev = max_abs_psi > 0.0 ? max_dev / max_abs_psi : 0.0;
  return r;
}

}  // namespace edp
