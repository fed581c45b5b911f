#include "dgp/strong_counts.hpp"

#include "dgp/errors.hpp"

namespace dgp {

namespace {

// MG(z,w) = sum_n e^{n^2 w/2} z^n/n!: c_{n,m} = (n^2/2)^m / (m! n!)
BiSeries<Rat> mg_series(int nz, int nw) {
    BiSeries<Rat> s(nz, nw, Rat(0));
    for (int n = 0; n <= nz; ++n) {
        Rat base = Rat(static_cast<long>(n) * n, 2);
        Rat p(1);
        Rat invn = Rat(1) / Rat::factorial(static_cast<unsigned long>(n));
        for (int m = 0; m <= nw; ++m) {
            s.at(n, m) = p * invn / Rat::factorial(static_cast<unsigned long>(m));
            p *= base;
        }
    }
    return s;
}

// G(z,w) = sum_n (1+w)^{binom(n,2)} z^n/n!: c_{n,m} = binom(binom(n,2), m)/n!
BiSeries<Rat> g_series(int nz, int nw) {
    BiSeries<Rat> s(nz, nw, Rat(0));
    for (int n = 0; n <= nz; ++n) {
        unsigned long c2 = static_cast<unsigned long>(n) * (n - 1) / 2;
        Rat invn = Rat(1) / Rat::factorial(static_cast<unsigned long>(n));
        for (int m = 0; m <= nw; ++m)
            s.at(n, m) = Rat::binomial(c2, static_cast<unsigned long>(m)) * invn;
    }
    return s;
}

// sum_n ((1+2w)/(1+w))^{binom(n,2)} z^n/n!
BiSeries<Rat> strict_ratio_series(int nz, int nw) {
    BiSeries<Rat> s(nz, nw, Rat(0));
    for (int n = 0; n <= nz; ++n) {
        unsigned long c2 = static_cast<unsigned long>(n) * (n - 1) / 2;
        Rat invn = Rat(1) / Rat::factorial(static_cast<unsigned long>(n));
        // (1+2w)^c2 * (1+w)^{-c2} as a truncated series in w
        std::vector<Rat> num(static_cast<size_t>(nw) + 1, Rat(0));
        for (int m = 0; m <= nw; ++m)
            num[static_cast<size_t>(m)] =
                Rat::binomial(c2, static_cast<unsigned long>(m)) * Rat::pow_int(Rat(2), m);
        std::vector<Rat> den(static_cast<size_t>(nw) + 1, Rat(0));
        for (int m = 0; m <= nw; ++m)
            den[static_cast<size_t>(m)] =
                Rat::binomial(c2 + static_cast<unsigned long>(m) - 1,
                              static_cast<unsigned long>(m)) *
                (m % 2 == 0 ? Rat(1) : Rat(-1));
        for (int m = 0; m <= nw; ++m) {
            Rat acc(0);
            for (int i = 0; i <= m; ++i)
                acc += num[static_cast<size_t>(i)] * den[static_cast<size_t>(m - i)];
            s.at(n, m) = acc * invn;
        }
    }
    return s;
}

} // namespace

BiSeries<Rat> strong_egf(StrongVariant variant, int order_z, int order_w) {
    BiSeries<Rat> base(0, 0, Rat(0));
    BiSeries<Rat> other(0, 0, Rat(0));
    switch (variant) {
        case StrongVariant::Multi:
            base = mg_series(order_z, order_w);
            other = base;
            break;
        case StrongVariant::Simple:
            base = g_series(order_z, order_w);
            other = base;
            break;
        case StrongVariant::Strict:
            base = g_series(order_z, order_w);
            other = strict_ratio_series(order_z, order_w);
            break;
    }
    BiSeries<Rat> had = hadamard_z(base, other.reciprocal());
    BiSeries<Rat> lg = had.log();
    return BiSeries<Rat>(order_z, order_w, Rat(0)) - lg;
}

ExcessPolynomial a_r_polynomial(int r, StrongVariant variant) {
    if (r < 1 || r > 6) throw domain_error("a_r_polynomial: r in [1, 6] supported");
    int degree_bound = (variant == StrongVariant::Multi   ? 2 * r
                        : variant == StrongVariant::Simple ? 5 * r
                                                           : 8 * r);
    BiSeries<Rat> strong = strong_egf(variant, degree_bound, degree_bound + r);
    // [y^r] Strong(z/y, y): the z^n coefficient is c_{n, n+r}
    std::vector<Rat> slice(static_cast<size_t>(degree_bound) + 1, Rat(0));
    for (int n = 0; n <= degree_bound; ++n) slice[static_cast<size_t>(n)] = strong.at(n, n + r);
    // multiply by (1 - z)^{3r}
    std::vector<Rat> out(slice.size() + static_cast<size_t>(3 * r), Rat(0));
    for (int i = 0; i <= 3 * r; ++i) {
        Rat b = Rat::binomial(static_cast<unsigned long>(3 * r), static_cast<unsigned long>(i)) *
                (i % 2 == 0 ? Rat(1) : Rat(-1));
        for (size_t jn = 0; jn < slice.size(); ++jn) out[jn + static_cast<size_t>(i)] += b * slice[jn];
    }
    // the factorization guarantees a polynomial of degree <= degree_bound;
    // everything above must cancel exactly
    for (size_t i = static_cast<size_t>(degree_bound) + 1; i < out.size(); ++i)
        if (!out[i].is_zero())
            throw domain_error("a_r_polynomial: tail did not cancel (truncation too small)");
    out.resize(static_cast<size_t>(degree_bound) + 1);
    return {r, variant, std::move(out)};
}

Rat s_r(int r) {
    if (r < 1) throw domain_error("s_r: r >= 1");
    int nz = 2 * r, nw = 3 * r;
    BiSeries<Rat> mg = mg_series(nz, nw);
    BiSeries<Rat> had = hadamard_z(mg, mg.reciprocal());
    BiSeries<Rat> lg = had.log();
    // -[z^{2r} w^{3r}] (1 - wz)^{3r-1} log(...)
    Rat acc(0);
    for (int i = 0; i <= 3 * r - 1 && i <= nz && i <= nw; ++i) {
        Rat b = Rat::binomial(static_cast<unsigned long>(3 * r - 1),
                              static_cast<unsigned long>(i)) *
                (i % 2 == 0 ? Rat(1) : Rat(-1));
        if (nz - i >= 0 && nw - i >= 0) acc += b * lg.at(nz - i, nw - i);
    }
    return -acc;
}

Rat e_r(int r) {
    return Rat::factorial(static_cast<unsigned long>(6 * r)) /
           (Rat::pow_int(Rat(2), 5 * r) * Rat::pow_int(Rat(3), 2 * r) *
            Rat::factorial(static_cast<unsigned long>(2 * r)) *
            Rat::factorial(static_cast<unsigned long>(3 * r)));
}

Series<Rat> s_rd_egf(int r, int d, int order) {
    if (r < 1 || d < 0 || d > 2 * r - 1) throw domain_error("s_rd_egf: need 0 <= d <= 2r-1");
    Series<Rat> s(order, Rat(0));
    Rat pref = Rat(1) / (Rat::factorial(static_cast<unsigned long>(3 * r - d)) *
                         Rat::factorial(static_cast<unsigned long>(2 * r - d)));
    // (wz)^{2r-d} (1-wz)^{-(3r-d)}: z^n coefficient binom(n-(2r-d)+(3r-d)-1, (3r-d)-1)
    for (int n = 2 * r - d; n <= order; ++n) {
        int j = n - (2 * r - d);
        s[n] = pref * Rat::binomial(static_cast<unsigned long>(j + 3 * r - d - 1),
                                    static_cast<unsigned long>(3 * r - d - 1));
    }
    return s;
}

} // namespace dgp
