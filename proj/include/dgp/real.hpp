#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "dgp/errors.hpp"

namespace dgp {

// Arbitrary-precision real number backed by MPFR.
//
// Every value carries its working precision in bits; mixing two values of
// different precision throws precision_mismatch instead of coercing.
// All operations round to nearest-even at the operands' precision.
// The MPFR exponent range is left at its (huge) default, so magnitudes such
// as exp(-n^2 w / 2) at n = 10^4 stay representable.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw domain_error("Real: cannot parse '" + s + "'");
    }

    Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // Same value at a different working precision (rounded if narrower).
    Real to_prec(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    std::string str(int digits = 17) const;

    friend Real operator+(const Real& a, const Real& b) {
        Real r(same_prec(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(same_prec(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(same_prec(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        if (b.is_zero()) throw domain_error("Real: division by zero");
        Real r(same_prec(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        if (b == 0) throw domain_error("Real: division by zero");
        Real r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend Real operator/(long a, const Real& b) {
        if (b.is_zero()) throw domain_error("Real: division by zero");
        Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r;
    }

    Real& operator+=(const Real& o) { check(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { check(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { check(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  private:
    static mpfr_prec_t same_prec(const Real& a, const Real& b) {
        if (a.prec() != b.prec())
            throw precision_mismatch("Real: mixed precisions " + std::to_string(a.prec()) +
                                     " and " + std::to_string(b.prec()));
        return a.prec();
    }
    void check(const Real& o) const { same_prec(*this, o); }
    mpfr_t v_;
};

Real abs(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);    // throws domain_error for a <= 0
Real log1p(const Real& a);
Real expm1(const Real& a);
Real sqrt(const Real& a);   // throws domain_error for a < 0
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long k);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& a);
Real cosh(const Real& a);
Real tanh(const Real& a);
Real gamma(const Real& a);
Real floor(const Real& a);
Real ldexp(const Real& a, long e);  // a * 2^e, exact
Real pi(mpfr_prec_t prec);
Real euler_e(mpfr_prec_t prec);
Real factorial(unsigned long n, mpfr_prec_t prec);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// nth root (n >= 1); a >= 0 required for even n.
Real root(const Real& a, unsigned long n);

} // namespace dgp
