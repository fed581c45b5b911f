#pragma once

#include <utility>
#include <vector>

#include "dgp/real.hpp"

namespace dgp {

// Description of an imaginary-axis integral
//
//   prefactor * (1/2 pi i) Int_{-i inf}^{i inf}
//       e^{-mu s - mu^3/6}
//       Prod_num Ai(k; -2^{1/3} s)^p / Prod_den Ai(k; -2^{1/3} s)^p  ds.
//
// Denominator Airy factors have no zeros on the imaginary axis (all Airy
// zeros are negative real), and the integrand must decay along +-i inf,
// which requires the total denominator power to exceed the numerator's.
struct AiryKernelSpec {
    std::vector<std::pair<long, int>> numer; // (Airy order k, power p>0)
    std::vector<std::pair<long, int>> denom;
    double tilt_mu = 0.0;
    double prefactor = 1.0;
};

// Evaluate the integral to relative tolerance tol. The integrand is
// conjugate-symmetric for real mu, so the value is real. For strongly
// negative mu the integration line is shifted to Re s = theta near the
// saddle, which removes the e^{|mu|^3/6}-scale cancellation; the integrand
// is analytic between the lines and decays, so the value is unchanged.
Real contour_integral(const AiryKernelSpec& spec, const Real& tol);

// Same integral on an explicitly chosen line Re s = theta (the Airy
// factors must not vanish on it; any theta below the first Airy zero of
// the factors is safe, in particular every theta <= 0).
Real contour_integral_shifted(const AiryKernelSpec& spec, const Real& tol, double theta);

// phi(mu) = 2^{-1/3} e^{-mu^3/6} (1/2 pi i) Int e^{-mu s} / Ai(-2^{1/3} s) ds,
// the critical-window acyclicity constant; phi(0) ~ 0.4887, phi(mu) ~ |mu|
// as mu -> -inf.
Real varphi(const Real& mu, const Real& tol);

// -2^{-2/3} (1/2 pi i) Int e^{-mu s - mu^3/6} / Ai'(-2^{1/3} s) ds,
// the critical-window elementarity constant.
Real elementary_critical(const Real& mu, const Real& tol);

// phi_{r,d}(mu) = (-1)^{1+3r-d} 2^{-2/3-r+d/3} (1/2 pi i)
//     Int Ai(1-3r+d; -2^{1/3}s) / Ai'(-2^{1/3}s)^2 e^{-mu s - mu^3/6} ds.
// The one-complex-component probability factor is phi_{r,d}(mu)/(2r-d)!
// times n^{-d/3}.
Real phi_rd(int r, int d, const Real& mu, const Real& tol);

// I(n, mu) = (-1)^n/(2 pi i) Int Ai(-n, tau)/Ai'(tau)^2
//            e^{2^{-1/3} mu tau - mu^3/6} d tau,  n in [0, 10].
Real airy_table_I(int n, const Real& mu, const Real& tol);

enum class ResidueKind { Acyclic, Elementary };

// Partial residue-sum alternative of varphi / elementary_critical for
// mu > 0:
//   acyclic:    2^{-2/3} e^{-mu^3/6} sum_k e^{2^{-1/3} mu a_k} / Ai'(a_k)
//   elementary: -e^{-mu^3/6}/2 sum_k e^{2^{-1/3} mu a_k'} / (a_k' Ai(a_k'))
// Returns the partial sum and an empirical truncation estimate (the last
// term's magnitude).
std::pair<Real, Real> residue_sum(ResidueKind kind, const Real& mu, int terms);

} // namespace dgp
