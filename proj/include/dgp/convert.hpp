#pragma once

#include "dgp/complex.hpp"
#include "dgp/rational.hpp"
#include "dgp/real.hpp"

namespace dgp {

inline Real to_real(const Rat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.raw(), MPFR_RNDN);
    return r;
}

inline Complex to_complex(const Real& x) { return Complex(x); }

} // namespace dgp
