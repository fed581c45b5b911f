#pragma once

#include <functional>
#include <vector>

#include "dgp/complex.hpp"

namespace dgp {

// Node/weight pair on the reference interval [-1, 1].
struct QuadNode {
    Real x;
    Real w;
};

// Cached tanh-sinh abscissas for a given precision and refinement level.
// Level l uses step h = 2^{-l} in the double-exponential variable; the
// truncation point is chosen so the discarded weights are below
// 2^{-(prec+16)}.
const std::vector<QuadNode>& tanh_sinh_nodes(mpfr_prec_t prec, int level);

// Integrate f over [a, b], refining the tanh-sinh level until two
// successive levels agree to |I_l - I_{l-1}| <= tol * scale with
// scale = max(|I_l|, scale_floor). Throws convergence_error if max_level
// is reached without agreement.
Complex integrate_ts(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& tol, const Real& scale_floor, int min_level = 4,
                     int max_level = 11);

} // namespace dgp
