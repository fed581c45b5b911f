#pragma once

#include <vector>

#include "dgp/complex.hpp"
#include "dgp/rational.hpp"
#include "dgp/real.hpp"

namespace dgp {

// Coefficient-ring glue. A "prototype" element supplies the working
// precision when the ring is a high-precision one; the rational ring
// ignores it.
template <class T>
struct Ring;

template <>
struct Ring<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static Rat from_long(long n, const Rat&) { return Rat(n); }
    static Rat factorial(unsigned long n, const Rat&) { return Rat::factorial(n); }
    static bool is_zero(const Rat& x) { return x.is_zero(); }
    static Rat log_const(const Rat& x) {
        if (!(x == Rat(1))) throw singular_series("series log: rational ring requires unit constant term");
        return Rat(0);
    }
};

template <>
struct Ring<Real> {
    static Real zero(const Real& p) { return Real(p.prec()); }
    static Real one(const Real& p) { return Real(1L, p.prec()); }
    static Real from_long(long n, const Real& p) { return Real(n, p.prec()); }
    static Real factorial(unsigned long n, const Real& p) { return dgp::factorial(n, p.prec()); }
    static bool is_zero(const Real& x) { return x.is_zero(); }
    static Real log_const(const Real& x) { return log(x); }
};

template <>
struct Ring<Complex> {
    static Complex zero(const Complex& p) { return Complex(p.prec()); }
    static Complex one(const Complex& p) { return Complex(1L, p.prec()); }
    static Complex from_long(long n, const Complex& p) { return Complex(n, p.prec()); }
    static Complex factorial(unsigned long n, const Complex& p) {
        return Complex(dgp::factorial(n, p.prec()));
    }
    static bool is_zero(const Complex& x) { return x.is_zero(); }
    static Complex log_const(const Complex& x) { return log(x); }
};

// Truncated formal power series sum_{n<=N} c_n z^n.
//
// Coefficients are stored as ordinary coefficients of z^n; when a series
// represents an exponential generating function the 1/n! is folded into
// c_n. hadamard_exp() re-inserts the n! explicitly, so
// hadamard_exp(a, b)_n = a_n * b_n * n! is the exponential Hadamard
// product in this convention.
template <class T>
class Series {
  public:
    Series(int order, const T& proto) : c_(static_cast<size_t>(order) + 1, Ring<T>::zero(proto)) {}
    explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    T& operator[](int n) { return c_[static_cast<size_t>(n)]; }
    const T& proto() const { return c_[0]; }

    Series truncated(int order) const {
        Series r(order, proto());
        for (int n = 0; n <= order && n <= this->order(); ++n) r[n] = c_[n];
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        Series r(N, a.proto());
        for (int n = 0; n <= N; ++n) r[n] = a[n] + b[n];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        Series r(N, a.proto());
        for (int n = 0; n <= N; ++n) r[n] = a[n] - b[n];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        Series r(N, a.proto());
        for (int n = 0; n <= N; ++n) {
            T acc = Ring<T>::zero(a.proto());
            for (int k = 0; k <= n; ++k) acc = acc + a[k] * b[n - k];
            r[n] = acc;
        }
        return r;
    }
    friend Series operator*(const Series& a, const T& s) {
        Series r(a.order(), a.proto());
        for (int n = 0; n <= a.order(); ++n) r[n] = a[n] * s;
        return r;
    }

    // 1/a with a_0 != 0, via the standard coefficient recurrence.
    Series reciprocal() const {
        if (Ring<T>::is_zero(c_[0]))
            throw singular_series("series reciprocal: zero constant term");
        int N = order();
        Series r(N, proto());
        T inv0 = Ring<T>::one(proto()) / c_[0];
        r[0] = inv0;
        for (int n = 1; n <= N; ++n) {
            T acc = Ring<T>::zero(proto());
            for (int k = 1; k <= n; ++k) acc = acc + c_[k] * r[n - k];
            r[n] = -(acc * inv0);
        }
        return r;
    }

    // exp(a) with a_0 = 0: e' = a' e.
    Series exp() const {
        if (!Ring<T>::is_zero(c_[0]))
            throw singular_series("series exp: nonzero constant term");
        int N = order();
        Series r(N, proto());
        r[0] = Ring<T>::one(proto());
        for (int n = 1; n <= N; ++n) {
            T acc = Ring<T>::zero(proto());
            for (int k = 1; k <= n; ++k)
                acc = acc + c_[k] * Ring<T>::from_long(k, proto()) * r[n - k];
            r[n] = acc / Ring<T>::from_long(n, proto());
        }
        return r;
    }

    // log(a) with a_0 a unit: l' = a'/a. In the rational ring a_0 must be 1.
    Series log() const {
        if (Ring<T>::is_zero(c_[0]))
            throw singular_series("series log: zero constant term");
        int N = order();
        Series r(N, proto());
        r[0] = Ring<T>::log_const(c_[0]);
        T inv0 = Ring<T>::one(proto()) / c_[0];
        for (int n = 1; n <= N; ++n) {
            // n a_0 l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
            T acc = c_[n] * Ring<T>::from_long(n, proto());
            for (int k = 1; k < n; ++k)
                acc = acc - r[k] * Ring<T>::from_long(k, proto()) * c_[n - k];
            r[n] = acc * inv0 / Ring<T>::from_long(n, proto());
        }
        return r;
    }

    Series derivative() const {
        int N = order();
        if (N == 0) return Series(0, proto());
        Series r(N - 1, proto());
        for (int n = 1; n <= N; ++n) r[n - 1] = c_[n] * Ring<T>::from_long(n, proto());
        return r;
    }

    // z -> s*z
    Series scale_arg(const T& s) const {
        Series r(order(), proto());
        T p = Ring<T>::one(proto());
        for (int n = 0; n <= order(); ++n) {
            r[n] = c_[n] * p;
            p = p * s;
        }
        return r;
    }

    T eval(const T& x) const {
        T acc = c_[static_cast<size_t>(order())];
        for (int n = order() - 1; n >= 0; --n) acc = acc * x + c_[n];
        return acc;
    }

  private:
    std::vector<T> c_;
};

// Exponential Hadamard product: (sum a_n z^n/n!) (.) (sum b_n z^n/n!) =
// sum a_n b_n z^n/n!. With ordinary stored coefficients this reads
// c_n = a_n * b_n * n!.
template <class T>
Series<T> hadamard_exp(const Series<T>& a, const Series<T>& b) {
    int N = std::min(a.order(), b.order());
    Series<T> r(N, a.proto());
    for (int n = 0; n <= N; ++n)
        r[n] = a[n] * b[n] * Ring<T>::factorial(static_cast<unsigned long>(n), a.proto());
    return r;
}

// Rectangular truncated bivariate series sum c_{n,m} z^n w^m.
template <class T>
class BiSeries {
  public:
    BiSeries(int nz, int nw, const T& proto)
        : nz_(nz), nw_(nw), c_(static_cast<size_t>(nz + 1) * (nw + 1), Ring<T>::zero(proto)) {}

    int order_z() const { return nz_; }
    int order_w() const { return nw_; }
    const T& at(int n, int m) const { return c_[idx(n, m)]; }
    T& at(int n, int m) { return c_[idx(n, m)]; }
    const T& proto() const { return c_[0]; }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.nz_, b.nz_), std::min(a.nw_, b.nw_), a.proto());
        for (int n = 0; n <= r.nz_; ++n)
            for (int m = 0; m <= r.nw_; ++m) r.at(n, m) = a.at(n, m) + b.at(n, m);
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.nz_, b.nz_), std::min(a.nw_, b.nw_), a.proto());
        for (int n = 0; n <= r.nz_; ++n)
            for (int m = 0; m <= r.nw_; ++m) r.at(n, m) = a.at(n, m) - b.at(n, m);
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.nz_, b.nz_), std::min(a.nw_, b.nw_), a.proto());
        for (int n1 = 0; n1 <= a.nz_; ++n1)
            for (int m1 = 0; m1 <= a.nw_; ++m1) {
                if (Ring<T>::is_zero(a.at(n1, m1))) continue;
                for (int n2 = 0; n1 + n2 <= r.nz_ && n2 <= b.nz_; ++n2)
                    for (int m2 = 0; m1 + m2 <= r.nw_ && m2 <= b.nw_; ++m2)
                        r.at(n1 + n2, m1 + m2) =
                            r.at(n1 + n2, m1 + m2) + a.at(n1, m1) * b.at(n2, m2);
            }
        return r;
    }

    // Reciprocal as a series in z whose coefficients are truncated series
    // in w; requires c_{0,0} != 0.
    BiSeries reciprocal() const;

    // log, requiring the z-constant slice to equal 1 (c_{0,0}=1, c_{0,m}=0).
    BiSeries log() const;

    // Exponential Hadamard product along z for each power of w.
    friend BiSeries hadamard_z(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.nz_, b.nz_), std::min(a.nw_, b.nw_), a.proto());
        for (int n = 0; n <= r.nz_; ++n) {
            T f = Ring<T>::factorial(static_cast<unsigned long>(n), a.proto());
            for (int m1 = 0; m1 <= r.nw_; ++m1) {
                if (Ring<T>::is_zero(a.at(n, m1))) continue;
                for (int m2 = 0; m1 + m2 <= r.nw_; ++m2)
                    r.at(n, m1 + m2) = r.at(n, m1 + m2) + a.at(n, m1) * b.at(n, m2) * f;
            }
        }
        return r;
    }

  private:
    size_t idx(int n, int m) const { return static_cast<size_t>(n) * (nw_ + 1) + m; }

    // w-slice helpers (series in w of length nw_+1)
    std::vector<T> slice(int n) const {
        std::vector<T> s;
        s.reserve(nw_ + 1);
        for (int m = 0; m <= nw_; ++m) s.push_back(at(n, m));
        return s;
    }
    static std::vector<T> w_mul(const std::vector<T>& a, const std::vector<T>& b, const T& proto) {
        std::vector<T> r(a.size(), Ring<T>::zero(proto));
        for (size_t i = 0; i < a.size(); ++i) {
            if (Ring<T>::is_zero(a[i])) continue;
            for (size_t j = 0; i + j < r.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        }
        return r;
    }
    static std::vector<T> w_recip(const std::vector<T>& a, const T& proto) {
        if (Ring<T>::is_zero(a[0]))
            throw singular_series("bivariate reciprocal: constant coefficient vanishes");
        std::vector<T> r(a.size(), Ring<T>::zero(proto));
        T inv0 = Ring<T>::one(proto) / a[0];
        r[0] = inv0;
        for (size_t n = 1; n < a.size(); ++n) {
            T acc = Ring<T>::zero(proto);
            for (size_t k = 1; k <= n; ++k) acc = acc + a[k] * r[n - k];
            r[n] = -(acc * inv0);
        }
        return r;
    }

    int nz_, nw_;
    std::vector<T> c_;
};

template <class T>
BiSeries<T> BiSeries<T>::reciprocal() const {
    std::vector<std::vector<T>> a;
    for (int n = 0; n <= nz_; ++n) a.push_back(slice(n));
    std::vector<std::vector<T>> b(static_cast<size_t>(nz_) + 1);
    std::vector<T> inv0 = w_recip(a[0], proto());
    b[0] = inv0;
    for (int n = 1; n <= nz_; ++n) {
        std::vector<T> acc(static_cast<size_t>(nw_) + 1, Ring<T>::zero(proto()));
        for (int k = 1; k <= n; ++k) {
            std::vector<T> t = w_mul(a[k], b[n - k], proto());
            for (int m = 0; m <= nw_; ++m) acc[m] = acc[m] + t[m];
        }
        std::vector<T> t = w_mul(acc, inv0, proto());
        for (auto& x : t) x = -x;
        b[n] = std::move(t);
    }
    BiSeries r(nz_, nw_, proto());
    for (int n = 0; n <= nz_; ++n)
        for (int m = 0; m <= nw_; ++m) r.at(n, m) = b[n][m];
    return r;
}

template <class T>
BiSeries<T> BiSeries<T>::log() const {
    // requires A(0, w) = 1 so that log A has zero z-constant slice
    if (Ring<T>::is_zero(at(0, 0)))
        throw singular_series("bivariate log: singular constant slice");
    for (int m = 0; m <= nw_; ++m) {
        T want = (m == 0) ? Ring<T>::one(proto()) : Ring<T>::zero(proto());
        if (!Ring<T>::is_zero(at(0, m) - want))
            throw singular_series("bivariate log: z-constant slice must be 1");
    }
    // n L_n = n A_n - sum_{k=1}^{n-1} k L_k A_{n-k}   (w-slice arithmetic, A_0 = 1)
    std::vector<std::vector<T>> a;
    for (int n = 0; n <= nz_; ++n) a.push_back(slice(n));
    std::vector<std::vector<T>> L(static_cast<size_t>(nz_) + 1,
                                  std::vector<T>(static_cast<size_t>(nw_) + 1, Ring<T>::zero(proto())));
    for (int n = 1; n <= nz_; ++n) {
        std::vector<T> acc = a[n];
        for (auto& x : acc) x = x * Ring<T>::from_long(n, proto());
        for (int k = 1; k < n; ++k) {
            std::vector<T> t = w_mul(L[k], a[n - k], proto());
            for (int m = 0; m <= nw_; ++m)
                acc[m] = acc[m] - t[m] * Ring<T>::from_long(k, proto());
        }
        for (auto& x : acc) x = x / Ring<T>::from_long(n, proto());
        L[n] = std::move(acc);
    }
    BiSeries r(nz_, nw_, proto());
    for (int n = 1; n <= nz_; ++n)
        for (int m = 0; m <= nw_; ++m) r.at(n, m) = L[n][m];
    return r;
}

} // namespace dgp
