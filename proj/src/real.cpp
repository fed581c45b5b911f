#include "dgp/real.hpp"

#include <cstdio>
#include <vector>

namespace dgp {

std::string Real::str(int digits) const {
    if (is_nan()) return "nan";
    if (!is_finite()) return sign() > 0 ? "inf" : "-inf";
    char* s = nullptr;
    // %.*Rg gives round-trippable decimal output at the requested digit count
    int n = mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out = n >= 0 ? std::string(s) : std::string("?");
    mpfr_free_str(s);
    return out;
}

#define DGP_UNARY(name, call, check_domain)                            \
    Real name(const Real& a) {                                         \
        check_domain;                                                  \
        Real r(a.prec());                                              \
        call(r.raw(), a.raw(), MPFR_RNDN);                             \
        return r;                                                      \
    }

DGP_UNARY(abs, mpfr_abs, )
DGP_UNARY(exp, mpfr_exp, )
DGP_UNARY(log, mpfr_log, if (a.sign() <= 0) throw domain_error("log: argument must be positive"))
DGP_UNARY(log1p, mpfr_log1p, if (a <= -1L) throw domain_error("log1p: argument must exceed -1"))
DGP_UNARY(expm1, mpfr_expm1, )
DGP_UNARY(sqrt, mpfr_sqrt, if (a.sign() < 0) throw domain_error("sqrt: negative argument"))
DGP_UNARY(sin, mpfr_sin, )
DGP_UNARY(cos, mpfr_cos, )
DGP_UNARY(sinh, mpfr_sinh, )
DGP_UNARY(cosh, mpfr_cosh, )
DGP_UNARY(tanh, mpfr_tanh, )
DGP_UNARY(gamma, mpfr_gamma, )

#undef DGP_UNARY

Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

Real pow(const Real& a, const Real& b) {
    if (a.sign() < 0) throw domain_error("pow: negative base");
    Real r(a.prec());
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& a, long k) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), k, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(y.prec());
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real ldexp(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real euler_e(mpfr_prec_t prec) {
    Real one(1L, prec);
    return exp(one);
}

Real factorial(unsigned long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

Real root(const Real& a, unsigned long n) {
    if (n % 2 == 0 && a.sign() < 0) throw domain_error("root: negative argument for even degree");
    Real r(a.prec());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.raw(), a.raw(), n, MPFR_RNDN);
#else
    mpfr_root(r.raw(), a.raw(), n, MPFR_RNDN);
#endif
    return r;
}

} // namespace dgp
