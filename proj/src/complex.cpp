#include "dgp/complex.hpp"

namespace dgp {

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    Real s(z.prec()), c(z.prec());
    mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
    return {m * c, m * s};
}

Real norm2(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

Complex sqrt(const Complex& z) {
    // principal branch via half-angle in polar form
    Real r = abs(z);
    if (r.is_zero()) return Complex(z.prec());
    Real th = atan2(z.im(), z.re());
    Real sr = sqrt(r);
    Real half = th / 2L;
    Real s(z.prec()), c(z.prec());
    mpfr_sin_cos(s.raw(), c.raw(), half.raw(), MPFR_RNDN);
    return {sr * c, sr * s};
}

Complex log(const Complex& z) {
    Real r = abs(z);
    if (r.is_zero()) throw domain_error("Complex log: zero argument");
    return {log(r), atan2(z.im(), z.re())};
}

Complex reciprocal(const Complex& z) {
    Real d = norm2(z);
    if (d.is_zero()) throw domain_error("Complex: reciprocal of zero");
    return {z.re() / d, -z.im() / d};
}

Complex pow_int(const Complex& z, long k) {
    if (k == 0) return Complex(1L, z.prec());
    bool inv = k < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Complex base = z;
    Complex acc(1L, z.prec());
    while (e) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return inv ? reciprocal(acc) : acc;
}

} // namespace dgp
