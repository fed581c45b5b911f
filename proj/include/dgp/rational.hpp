#pragma once

#include <gmp.h>

#include <string>
#include <utility>

#include "dgp/errors.hpp"

namespace dgp {

// Exact rational number backed by GMP. Always kept canonical
// (positive denominator, gcd(num, den) = 1).
class Rat {
  public:
    Rat() { mpq_init(v_); }
    Rat(long num, long den = 1) {
        if (den == 0) throw domain_error("Rat: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        if (den != 1) {
            mpq_t d; mpq_init(d); mpq_set_si(d, den, 1);
            mpq_div(v_, v_, d); mpq_clear(d);
        }
    }
    explicit Rat(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0) {
            mpq_clear(v_);
            throw domain_error("Rat: cannot parse '" + s + "'");
        }
        if (mpz_sgn(mpq_denref(v_)) == 0) { mpq_clear(v_); throw domain_error("Rat: zero denominator"); }
        mpq_canonicalize(v_);
    }

    Rat(const Rat& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rat(Rat&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    Rat& operator=(const Rat& o) { if (this != &o) mpq_set(v_, o.v_); return *this; }
    Rat& operator=(Rat&& o) noexcept { mpq_swap(v_, o.v_); return *this; }
    ~Rat() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }
    double to_double() const { return mpq_get_d(v_); }
    mpq_srcptr raw() const { return v_; }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.v_, a.v_, b.v_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.v_, a.v_, b.v_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.v_, a.v_, b.v_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw domain_error("Rat: division by zero");
        Rat r; mpq_div(r.v_, a.v_, b.v_); return r;
    }
    Rat operator-() const { Rat r; mpq_neg(r.v_, v_); return r; }
    Rat& operator+=(const Rat& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(v_, v_, o.v_); return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    static Rat factorial(unsigned long n) {
        Rat r;
        mpz_fac_ui(mpq_numref(r.v_), n);
        return r;
    }
    static Rat binomial(unsigned long n, unsigned long k) {
        Rat r;
        if (k > n) return Rat(0);
        mpz_bin_uiui(mpq_numref(r.v_), n, k);
        return r;
    }
    static Rat pow_int(const Rat& a, long k) {
        if (k < 0) return Rat(1) / pow_int(a, -k);
        Rat r(1), base = a;
        unsigned long e = static_cast<unsigned long>(k);
        while (e) {
            if (e & 1UL) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

  private:
    mpq_t v_;
};

} // namespace dgp
