#include "edp/specfun.hpp"

#include <cmath>
#include <string>

namespace edp::specfun {

namespace {

// Complex Kahan accumulator; cancellation here is mild (n <= ~30) so
// compensated left-to-right summation is enough.
struct CompensatedSum {
  Complex s{0.0, 0.0};
  Complex c{0.0, 0.0};
  void add(Complex v) {
    const Complex y = v - c;
    const Complex t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

bool is_nonpositive_integer(Complex v, double* rounded = nullptr) {
  if (std::abs(v.imag()) > 1e-13) return false;
  const double r = std::round(v.real());
  if (std::abs(v.real() - r) > 1e-13 * std::max(1.0, std::abs(v.real()))) return false;
  if (r > 0.0) return false;
  if (rounded) *rounded = r;
  return true;
}

}  // namespace

Complex pochhammer(Complex a, int k) {
  if (k < 0) throw DomainError("pochhammer: k must be nonnegative");
  Complex p{1.0, 0.0};
  for (int j = 0; j < k; ++j) p *= a + static_cast<double>(j);
  return p;
}

Complex jacobi_poly(int n, Complex A, Complex B, Complex z) {
  if (n < 0) throw DomainError("jacobi_poly: n must be nonnegative");
  double ap1;
  if (is_nonpositive_integer(A + 1.0, &ap1) && ap1 >= -n + 1) {
    throw DomainError("jacobi_poly: A+1 is a nonpositive integer >= -n+1, "
                      "denominator Pochhammer vanishes");
  }
  if (n == 0) return {1.0, 0.0};

  double nfact = 1.0;
  for (int j = 2; j <= n; ++j) nfact *= j;
  const Complex prefactor = pochhammer(A + 1.0, n) / nfact;

  const Complex u = (1.0 - z) / 2.0;
  CompensatedSum sum;
  Complex term{1.0, 0.0};
  sum.add(term);
  for (int k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    term *= (kd - 1.0 - n) * (static_cast<double>(n) + A + B + kd) /
            ((A + kd) * kd) * u;
    sum.add(term);
  }
  return prefactor * sum.s;
}

Complex jacobi_poly_derivative(int n, Complex A, Complex B, Complex z) {
  if (n < 0) throw DomainError("jacobi_poly_derivative: n must be nonnegative");
  if (n == 0) return {0.0, 0.0};
  return 0.5 * (static_cast<double>(n) + A + B + 1.0) *
         jacobi_poly(n - 1, A + 1.0, B + 1.0, z);
}

Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z) {
  int n_term = -1;  // terminating index, -1 if the series does not terminate
  double r;
  if (is_nonpositive_integer(a, &r)) n_term = static_cast<int>(-r);
  if (is_nonpositive_integer(b, &r)) {
    const int nb = static_cast<int>(-r);
    if (n_term < 0 || nb < n_term) n_term = nb;
  }
  if (n_term < 0 && std::abs(z) > 0.8) {
    throw DomainError("hyp2f1_series: |z| > 0.8 and series does not terminate");
  }

  constexpr int kMaxTerms = 500;
  CompensatedSum sum;
  Complex term{1.0, 0.0};
  sum.add(term);
  for (int k = 0;; ++k) {
    if (n_term >= 0 && k == n_term) break;  // exact finite sum done
    if (n_term < 0 && k == kMaxTerms) {
      throw ConvergenceError("hyp2f1_series: no convergence after 500 terms");
    }
    const Complex ck = c + static_cast<double>(k);
    if (std::abs(ck) < 1e-14) {
      throw DomainError("hyp2f1_series: c is a nonpositive integer reached "
                        "before the series terminates");
    }
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
            (ck * (k + 1.0)) * z;
    sum.add(term);
    if (n_term < 0 && std::abs(term) < 1e-16 * std::abs(sum.s)) break;
  }
  return sum.s;
}

}  // namespace edp::specfun
