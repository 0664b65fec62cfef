#pragma once

#include "edp/types.hpp"

namespace edp::specfun {

// Rising factorial a(a+1)...(a+k-1); k = 0 gives 1.
Complex pochhammer(Complex a, int k);

// Jacobi polynomial P_n^{(A,B)}(z) with fully complex parameters, evaluated
// through its terminating hypergeometric sum. Throws DomainError when A+1 is
// a nonpositive integer >= -n+1 (a denominator factor vanishes before the
// numerator terminates).
Complex jacobi_poly(int n, Complex A, Complex B, Complex z);

// d/dz P_n^{(A,B)}(z) = ((n+A+B+1)/2) P_{n-1}^{(A+1,B+1)}(z); 0 for n = 0.
Complex jacobi_poly_derivative(int n, Complex A, Complex B, Complex z);

// Gauss hypergeometric series 2F1(a,b;c;z) by partial sums. Terminating
// cases (a or b a nonpositive integer) are summed exactly; otherwise
// requires |z| <= 0.8 and stops once |term| < 1e-16 |sum|, with a 500-term
// budget (ConvergenceError beyond it).
Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z);

}  // namespace edp::specfun
