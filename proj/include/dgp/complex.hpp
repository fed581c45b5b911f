#pragma once

#include "dgp/real.hpp"

namespace dgp {

// Complex number with Real components sharing one precision.
class Complex {
  public:
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        if (re_.prec() != im_.prec())
            throw precision_mismatch("Complex: component precisions differ");
    }
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) {}
    Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re_ * b.re_ + b.im_ * b.im_;
        if (d.is_zero()) throw domain_error("Complex: division by zero");
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    Complex operator-() const { return {-re_, -im_}; }

    friend Complex operator*(const Complex& a, const Real& s) { return {a.re_ * s, a.im_ * s}; }
    friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re_ / s, a.im_ / s}; }
    friend Complex operator*(const Complex& a, long s) { return {a.re_ * s, a.im_ * s}; }
    friend Complex operator/(const Complex& a, long s) { return {a.re_ / s, a.im_ / s}; }
    friend Complex operator+(const Complex& a, long s) { return {a.re_ + s, a.im_}; }
    friend Complex operator-(const Complex& a, long s) { return {a.re_ - s, a.im_}; }
    friend Complex operator-(long s, const Complex& a) { return {s - a.re_, -a.im_}; }

    Complex conj() const { return {re_, -im_}; }

    std::string str(int digits = 17) const {
        return re_.str(digits) + (im_.sign() < 0 ? "" : "+") + im_.str(digits) + "i";
    }

  private:
    Real re_, im_;
};

Complex exp(const Complex& z);
Real abs(const Complex& z);
Real norm2(const Complex& z);      // |z|^2
Complex sqrt(const Complex& z);    // principal branch
Complex log(const Complex& z);     // principal branch
Complex pow_int(const Complex& z, long k);
Complex reciprocal(const Complex& z);

inline Complex make_i(mpfr_prec_t prec) { return {Real(prec), Real(1L, prec)}; }

} // namespace dgp
