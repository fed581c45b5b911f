#include "dgp/trees.hpp"

#include "dgp/convert.hpp"

namespace dgp {

Series<Rat> tree_series(TreeKind which, int order) {
    Series<Rat> t(order, Rat(0));
    for (int n = 1; n <= order; ++n)
        t[n] = Rat::pow_int(Rat(n), n - 1) / Rat::factorial(static_cast<unsigned long>(n));
    if (which == TreeKind::Rooted) return t;
    Series<Rat> u = t - (t * t) * Rat(1, 2);
    return u;
}

namespace {

// Coefficients of S(y) where (1 - S) e^S = 1 - y^2/2, S(y) = y - y^2/3 + ...
// Solved order by order in the rational ring; cached per requested order.
Series<Rat> puiseux_s(int order) {
    Series<Rat> s(order, Rat(0));
    s[1] = Rat(1);
    // match coefficients of (1 - S) e^S = 1 - y^2/2 incrementally
    for (int n = 2; n <= order; ++n) {
        Series<Rat> trunc = s.truncated(n);
        Series<Rat> lhs = (Series<Rat>(n, Rat(0)) + trunc).exp();
        Series<Rat> one_minus(n, Rat(0));
        one_minus[0] = Rat(1);
        lhs = (one_minus - trunc) * lhs;
        Rat target = (n == 2) ? Rat(-1, 2) : Rat(0);
        // lhs[n] depends linearly on s[n] with slope -1 (from -S e^S term)
        s[n] = lhs[n] - target;
    }
    return s;
}

Complex newton_tree(const Complex& x, Complex t, mpfr_prec_t prec) {
    Real tol = ldexp(Real(1L, prec), -(static_cast<long>(prec) - 6));
    Real scale = max(abs(x), Real("1e-30", prec));
    for (int it = 0; it < 200; ++it) {
        Complex emt = exp(-t);
        Complex f = t * emt - x;
        if (abs(f) <= tol * scale) break;
        Complex df = (Complex(1L, prec) - t) * emt;
        if (abs(df).is_zero()) break;
        t = t - f / df;
    }
    return t;
}

} // namespace

Complex tree_eval(TreeKind which, const Complex& x) {
    mpfr_prec_t prec = x.prec();
    if (x.im().is_zero() && x.re() * euler_e(prec) > 1L)
        throw domain_error("tree_eval: argument on the branch cut [1/e, +inf)");

    Complex t(prec);
    if (!x.is_zero()) {
        Complex y = sqrt((Complex(1L, prec) - x * euler_e(prec)) * 2L);
        Real ay = abs(y);
        if (ay < Real(0.8, prec)) {
            static Series<Rat> s_rat = puiseux_s(48);
            Series<Complex> s(s_rat.order(), Complex(prec));
            for (int n = 0; n <= s_rat.order(); ++n) s[n] = Complex(to_real(s_rat[n], prec));
            t = Complex(1L, prec) - s.eval(y);
            if (!ay.is_zero()) t = newton_tree(x, t, prec);
        } else if (abs(x) <= Real(0.25, prec)) {
            static Series<Rat> t_rat = tree_series(TreeKind::Rooted, 48);
            Series<Complex> ts(t_rat.order(), Complex(prec));
            for (int n = 0; n <= t_rat.order(); ++n) ts[n] = Complex(to_real(t_rat[n], prec));
            t = newton_tree(x, ts.eval(x), prec);
        } else {
            // walk along the ray from a small multiple of x, reusing each
            // solution as the next seed
            Complex dir = x / abs(x);
            Real a(0.2, prec);
            t = newton_tree(dir * a, dir * a, prec);
            Real target = abs(x);
            while (a < target) {
                a = min(a + Real(0.05, prec), target);
                t = newton_tree(dir * a, t, prec);
            }
            t = newton_tree(x, t, prec);
        }
    }
    if (which == TreeKind::Rooted) return t;
    return t - t * t / 2L;
}

Real tree_eval(TreeKind which, const Real& x) {
    return tree_eval(which, Complex(x)).re();
}

} // namespace dgp
