#include "edp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace edp {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (QUADPACK qk15).
constexpr int kGK = 8;
constexpr double kXgk[kGK] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[kGK] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
struct Panel {
  double a, b;
  T value;
  double error;
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = kWgk[7] * fc;
  T gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const T flo = f(center - half * kXgk[j]);
    const T fhi = f(center + half * kXgk[j]);
    kronrod += kWgk[j] * (flo + fhi);
    if (j % 2 == 1) gauss += kWg[j / 2] * (flo + fhi);
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

struct ByError {
  template <typename T>
  bool operator()(const Panel<T>& lhs, const Panel<T>& rhs) const {
    return lhs.error < rhs.error;
  }
};

template <typename T, typename F>
void integrate_truncated(const F& f, double L, double tol, T& value,
                         double& error, long& evaluations) {
  constexpr long kBudget = 1'000'000;
  constexpr int kInitialPanels = 8;

  std::priority_queue<Panel<T>, std::vector<Panel<T>>, ByError> panels;
  value = T{};
  error = 0.0;
  evaluations = 0;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = -L + 2.0 * L * i / kInitialPanels;
    const double b = -L + 2.0 * L * (i + 1) / kInitialPanels;
    auto p = gk15<T>(f, a, b);
    evaluations += 15;
    value += p.value;
    error += p.error;
    panels.push(p);
  }
  while (error > tol) {
    if (evaluations >= kBudget) {
      throw ConvergenceError("integrate_decaying: tolerance not met within "
                             "the evaluation budget");
    }
    Panel<T> worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15<T>(f, worst.a, mid);
    auto right = gk15<T>(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
}

}  // namespace

QuadratureResult integrate_decaying(const std::function<double(double)>& f,
                                    double kappa, double tol) {
  if (!(kappa > 0.0)) throw DomainError("integrate_decaying: kappa must be > 0");
  if (!(tol > 0.0)) throw DomainError("integrate_decaying: tol must be > 0");
  QuadratureResult r;
  r.half_width = (std::log(1.0 / tol) + 10.0) / (2.0 * kappa);
  integrate_truncated<double>(f, r.half_width, tol, r.value, r.error_estimate,
                              r.evaluations);
  r.error_estimate +=
      (std::abs(f(r.half_width)) + std::abs(f(-r.half_width))) / (2.0 * kappa);
  r.evaluations += 2;
  return r;
}

ComplexQuadratureResult integrate_decaying_complex(
    const std::function<Complex(double)>& f, double kappa, double tol) {
  if (!(kappa > 0.0)) throw DomainError("integrate_decaying: kappa must be > 0");
  if (!(tol > 0.0)) throw DomainError("integrate_decaying: tol must be > 0");
  ComplexQuadratureResult r;
  r.half_width = (std::log(1.0 / tol) + 10.0) / (2.0 * kappa);
  integrate_truncated<Complex>(f, r.half_width, tol, r.value, r.error_estimate,
                               r.evaluations);
  r.error_estimate +=
      (std::abs(f(r.half_width)) + std::abs(f(-r.half_width))) / (2.0 * kappa);
  r.evaluations += 2;
  return r;
}

QuadratureResult modified_norm(const BoundState& s, const ScarfPotential& V,
                               double tol, double normalization) {
  if (!(s.level.kappa > 0.0)) {
    throw DomainError("modified_norm: level has no positive decay rate");
  }
  auto integrand = [&](double x) {
    const SpinorSample sp = eval_spinor(s, V, x, normalization);
    return norm_weight(V, x, s.level.E) * (sp.density_plus + sp.density_minus);
  };
  return integrate_decaying(integrand, s.level.kappa, tol);
}

ComplexQuadratureResult ortho_overlap(const BoundState& sm, const BoundState& sn,
                                      const ScarfPotential& V, double tol) {
  const double kappa = std::min(sm.level.kappa, sn.level.kappa);
  if (!(kappa > 0.0)) {
    throw DomainError("ortho_overlap: a level has no positive decay rate");
  }
  const double Em = sm.level.E;
  const double En = sn.level.E;
  auto integrand = [&](double x) {
    const SpinorSample am = eval_spinor(sm, V, x, 1.0);
    const SpinorSample an = eval_spinor(sn, V, x, 1.0);
    const Complex bilinear = std::conj(am.psi_plus) * an.psi_plus +
                             std::conj(am.psi_minus) * an.psi_minus;
    return ortho_weight(V, x, Em, En) * bilinear;
  };
  return integrate_decaying_complex(integrand, kappa, tol);
}

double continuity_residual(const BoundState& sm, const BoundState& sn,
                           const ScarfPotential& V, double x) {
  const Complex kI{0.0, 1.0};
  auto density = [&](double xx) {
    const SpinorSample am = eval_spinor(sm, V, xx, 1.0);
    const SpinorSample an = eval_spinor(sn, V, xx, 1.0);
    return std::conj(am.psi_plus) * an.psi_plus +
           std::conj(am.psi_minus) * an.psi_minus;
  };
  auto current = [&](double xx) {
    const SpinorSample am = eval_spinor(sm, V, xx, 1.0);
    const SpinorSample an = eval_spinor(sn, V, xx, 1.0);
    return std::conj(am.psi_plus) * an.psi_minus +
           std::conj(am.psi_minus) * an.psi_plus;
  };
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  const Complex dJx = (-current(x + 2.0 * h) + 8.0 * current(x + h) -
                       8.0 * current(x - h) + current(x - 2.0 * h)) /
                      (12.0 * h);
  const double Em = sm.level.E;
  const double En = sn.level.E;
  const Complex P = density(x);
  const Complex lhs = -kI * (En - Em) * P +
                      kI * (eval_potential(V, x, En) - eval_potential(V, x, Em)) * P +
                      dJx;
  return std::abs(lhs);
}

}  // namespace edp
