#pragma once

#include "dgp/series.hpp"

namespace dgp {

enum class StrongVariant { Multi, Simple, Strict };

// Polynomial A_r (or its simple/strict variant) from the factorization
// Strong_r(z, w) = w^r A_r(wz) / (1 - wz)^{3r}; degree at most 2r / 5r / 8r
// and A_r(1) = s_r for every variant.
struct ExcessPolynomial {
    int r;
    StrongVariant variant;
    std::vector<Rat> coeffs;

    int degree() const {
        int d = static_cast<int>(coeffs.size()) - 1;
        while (d > 0 && coeffs[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    }
    Rat value(const Rat& x) const {
        Rat acc(0);
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }
};

// Exponential generating function of strongly connected multidigraphs /
// simple digraphs / strict digraphs, via
//   Strong = -log( MG (.)z 1/MG ),
// with G in place of MG for the simple variant and the
// (1+2w)^binom/(1+w)^binom ratio series for the strict one. Coefficients
// are stored as ordinary coefficients of z^n w^m (factorials folded in).
BiSeries<Rat> strong_egf(StrongVariant variant, int order_z, int order_w);

// A_r(z) = (1 - z)^{3r} [y^r] Strong(z/y, y), exact.
ExcessPolynomial a_r_polynomial(int r, StrongVariant variant);

// s_r = -[z^{2r} w^{3r}] (1 - wz)^{3r-1} log(MG (.)z 1/MG): the number of
// cubic strongly connected multidigraphs of excess r divided by (2r)!(3r)!.
Rat s_r(int r);

// e_r = (6r)! / (2^{5r} 3^{2r} (2r)! (3r)!), the Wright constant for cubic
// multigraph kernels.
Rat e_r(int r);

// EGF of strongly connected multidigraphs with a fixed kernel of excess r
// and deficiency d: S_{r,d}(z,w) = w^r (wz)^{2r-d} /
// ((3r-d)! (2r-d)! (1-wz)^{3r-d}). Every z^n coefficient carries w^{n+r};
// the returned series stores the z-coefficients with that grading implied.
Series<Rat> s_rd_egf(int r, int d, int order);

} // namespace dgp
