#pragma once

#include <vector>

#include "dgp/complex.hpp"

namespace dgp {

// Generalized Airy function Ai(k; z): the k-th derivative of Ai for k >= 0
// and the |k|-fold antiderivative normalized by the contour Pi(pi/3) for
// k < 0. Evaluation uses the Maclaurin series (seeded by Ai(0), Ai'(0) via
// the Gamma function) for k >= 0 and |z| <= 6, and tanh-sinh quadrature
// over the three-segment contour Pi(pi/3) otherwise and for all k < 0.
//
// Results carry the argument's precision; internal work adds guard bits
// sized from |z|^{3/2} to absorb the cancellation both routes incur.

Complex ai(const Complex& z);
Complex ai_prime(const Complex& z);
Real ai(const Real& z);
Real ai_prime(const Real& z);

Complex ai_general(long k, const Complex& z);
Real ai_general(long k, const Real& z);

// One shared contour pass evaluating Ai(k; z) for every k in ks.
// Used by the imaginary-axis integral engine, where the integrand needs a
// dozen orders at each quadrature node.
std::vector<Complex> ai_general_batch(const std::vector<long>& ks, const Complex& z);

// Fixed-level variant, for callers that validate the tanh-sinh level once
// (at their worst-case argument, via ai_contour_pick_level) and then
// evaluate many arguments without per-call re-validation.
std::vector<Complex> ai_contour_batch_at(const std::vector<long>& ks, const Complex& z, int level);
int ai_contour_pick_level(const std::vector<long>& ks, const Complex& z);

// Asymptotic-series route alone; returns false when the series cannot
// certify the precision carried by z.
bool ai_asym_try(long k, const Complex& z, Complex& out);

// j-th zero (by modulus, all negative real) of Ai (prime=false) or Ai'
// (prime=true). Newton from the classical asymptotic seed with a
// bisection safeguard; throws convergence_error instead of returning a
// wrong basin.
Real ai_root(int j, bool prime, mpfr_prec_t prec);

// Leading-order large-|z| approximation (cross-check / tail estimator):
// Ai(k; z) ~ (-1)^k z^{k/2 - 1/4} exp(-(2/3) z^{3/2}) / (2 sqrt(pi)).
Complex ai_asymptotic(long k, const Complex& z);

} // namespace dgp
