#include "dgp/deformed_exp.hpp"

#include <cmath>

#include "dgp/airy.hpp"
#include "dgp/convert.hpp"
#include "dgp/errors.hpp"
#include "dgp/trees.hpp"

namespace dgp {

EntireFn EntireFn::monomial(int m) {
    std::vector<Rat> p(static_cast<size_t>(m) + 1, Rat(0));
    p[static_cast<size_t>(m)] = Rat(1);
    return EntireFn(std::move(p), 0);
}

Series<Rat> EntireFn::maclaurin(int order) const {
    Series<Rat> ck(order, Rat(0));
    for (int j = 1; j <= k_ && j <= order; ++j) ck[j] = Rat(1, j);
    Series<Rat> e = ck.exp();
    Series<Rat> p(order, Rat(0));
    for (size_t i = 0; i < poly_.size() && static_cast<int>(i) <= order; ++i) p[static_cast<int>(i)] = poly_[i];
    return p * e;
}

Real EntireFn::value1(mpfr_prec_t prec) const {
    Rat p1(0), h(0);
    for (const auto& c : poly_) p1 += c;
    for (int j = 1; j <= k_; ++j) h += Rat(1, j);
    return to_real(p1, prec) * exp(to_real(h, prec));
}

Real EntireFn::dvalue1(mpfr_prec_t prec) const {
    Rat p1(0), dp1(0), h(0);
    for (size_t i = 0; i < poly_.size(); ++i) {
        p1 += poly_[i];
        dp1 += poly_[i] * Rat(static_cast<long>(i));
    }
    for (int j = 1; j <= k_; ++j) h += Rat(1, j);
    // F' = (P' + P C_k') e^{C_k}, C_k'(1) = k
    return (to_real(dp1, prec) + to_real(p1, prec) * static_cast<long>(k_)) * exp(to_real(h, prec));
}

Complex EntireFn::eval(const Complex& x) const {
    mpfr_prec_t prec = x.prec();
    Complex p(prec);
    for (size_t i = poly_.size(); i-- > 0;) p = p * x + Complex(to_real(poly_[i], prec));
    Complex ck(prec);
    Complex xp(1L, prec);
    for (int j = 1; j <= k_; ++j) {
        xp = xp * x;
        ck = ck + xp / static_cast<long>(j);
    }
    return p * exp(ck);
}

EntireFn EntireFn::times_x() const {
    std::vector<Rat> p(poly_.size() + 1, Rat(0));
    for (size_t i = 0; i < poly_.size(); ++i) p[i + 1] = poly_[i];
    return EntireFn(std::move(p), k_);
}

EntireFn EntireFn::x_dfdx() const {
    // x F' = (x P' + P (x + x^2 + ... + x^k)) e^{C_k}
    std::vector<Rat> p(poly_.size() + static_cast<size_t>(k_) + 1, Rat(0));
    for (size_t i = 0; i < poly_.size(); ++i) {
        p[i] += poly_[i] * Rat(static_cast<long>(i));
        for (int j = 1; j <= k_; ++j) p[i + static_cast<size_t>(j)] += poly_[i];
    }
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    return EntireFn(std::move(p), k_);
}

bool EntireFn::rootfinding_safe() const {
    int nonzero = 0;
    for (const auto& c : poly_)
        if (!c.is_zero()) ++nonzero;
    return nonzero == 1;
}

namespace {

// weight(n): e^{-n^2 w/2} or (1+w)^{-binom(n,2)}, supplied incrementally:
// u_{n+1} = u_n * q^n * s with q = e^{-w} resp. 1/(1+w), s = e^{-w/2}
// resp. 1.
struct WeightGen {
    WeightGen(const Real& w, GgfKind kind, mpfr_prec_t prec)
        : u(1L, prec), qpow(1L, prec), q(prec), s(1L, prec) {
        if (kind == GgfKind::Multigraphic) {
            q = exp(-w);
            s = exp(-(w / 2L));
        } else {
            q = 1L / (Real(1L, prec) + w);
        }
    }
    Real next() { // returns weight(n) for n = 0, 1, 2, ...
        Real cur = u;
        u = u * qpow * s;
        qpow = qpow * q;
        return cur;
    }
    Real u, qpow, q, s;
};

// Sequential generator for c_n = [z^n] (1-wz)^r e^{-z} F(wz).
//
// Write F = x^m Ptil(x) e^{C_k(x)} with Ptil(0) != 0 and
// h(z) = (1-wz)^r Ptil(wz) e^{C_k(wz)} e^{-z}. Logarithmic differentiation
// gives the first-order ODE  A(z) h'(z) = B(z) h(z) with
//   A(z) = (1-x) Ptil(x),            x = wz,
//   B(z) = -r w Ptil - (1-x) Ptil + w (1-x)(C_k' Ptil + Ptil'),
// so the Taylor coefficients of h obey a short recurrence that costs O(1)
// ring operations per coefficient. The monomial factor shifts the index:
// c_n = w^m htil_{n-m}.
//
// The recurrence's parasitic solutions contract by a factor ~w per step
// while injected roundoff is further crushed by the e^{-n^2 w/2} weights,
// so running it forward is stable for the Hadamard sums.
struct CoefGen {
    CoefGen(const Real& w, int r, const EntireFn& F, mpfr_prec_t prec)
        : prec_(prec), wm_(1L, prec) {
        const std::vector<Rat>& P = F.poly();
        size_t m = 0;
        while (m < P.size() && P[m].is_zero()) ++m;
        shift_ = static_cast<int>(m);
        for (int i = 0; i < shift_; ++i) wm_ = wm_ * w;
        std::vector<Rat> pt(P.begin() + static_cast<long>(m), P.end());
        int k = F.ck_order();

        auto mul_x = [](std::vector<Rat> v) {
            v.insert(v.begin(), Rat(0));
            return v;
        };
        auto sub = [](std::vector<Rat> a, const std::vector<Rat>& b) {
            if (a.size() < b.size()) a.resize(b.size(), Rat(0));
            for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
            return a;
        };
        auto add = [](std::vector<Rat> a, const std::vector<Rat>& b) {
            if (a.size() < b.size()) a.resize(b.size(), Rat(0));
            for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
            return a;
        };

        // A = (1-x) pt
        std::vector<Rat> Ax = sub(pt, mul_x(pt));
        // dpt = pt', ckp = C_k' = 1 + x + ... + x^{k-1}
        std::vector<Rat> dpt(pt.size() > 1 ? pt.size() - 1 : 1, Rat(0));
        for (size_t i = 1; i < pt.size(); ++i) dpt[i - 1] = pt[i] * Rat(static_cast<long>(i));
        std::vector<Rat> inner = dpt;
        if (k > 0) {
            std::vector<Rat> ckp_pt(pt.size() + static_cast<size_t>(k) - 1, Rat(0));
            for (int j = 0; j < k; ++j)
                for (size_t i = 0; i < pt.size(); ++i) ckp_pt[i + static_cast<size_t>(j)] += pt[i];
            inner = add(inner, ckp_pt);
        }
        std::vector<Rat> w_inner = sub(inner, mul_x(inner)); // (1-x)(C' pt + pt')

        // assemble Real coefficient arrays in z: x^i -> w^i z^i
        auto scale = [&](const std::vector<Rat>& v, int extra_w) {
            std::vector<Real> out;
            Real wp(1L, prec);
            for (int i = 0; i < extra_w; ++i) wp = wp * w;
            for (const auto& c : v) {
                out.push_back(to_real(c, prec) * wp);
                wp = wp * w;
            }
            return out;
        };
        A_ = scale(Ax, 0);
        // B: -r w pt (extra w), -(1-x)pt (no extra), + w(1-x)inner (extra w)
        std::vector<Real> b1 = scale(pt, 1);
        for (auto& c : b1) c = c * (-static_cast<long>(r));
        std::vector<Real> b2 = scale(pt, 0);
        std::vector<Real> b2x = scale(mul_x(pt), 0);
        std::vector<Real> b3 = scale(w_inner, 1);
        size_t blen = std::max({b1.size(), b2.size(), b2x.size(), b3.size()});
        B_.assign(blen, Real(prec));
        for (size_t i = 0; i < blen; ++i) {
            if (i < b1.size()) B_[i] += b1[i];
            if (i < b2.size()) B_[i] -= b2[i];
            if (i < b2x.size()) B_[i] += b2x[i];
            if (i < b3.size()) B_[i] += b3[i];
        }
        depth_ = std::max(A_.size(), B_.size() + 1);
        hist_.assign(depth_, Real(prec));
        hist_[0] = to_real(pt[0], prec); // htil(0) = Ptil(0)
        n_ = 0;
    }

    // c_n for n = 0, 1, 2, ... (must be called sequentially)
    Real next() {
        int n = n_++;
        if (n < shift_) return Real(prec_);
        long q = n - shift_;
        if (q == 0) return hist_[0] * wm_;
        // hist_[j] currently holds htil_{q-1-j}
        auto at = [&](long idx) -> const Real& {
            return hist_[static_cast<size_t>(q - 1 - idx)];
        };
        // A_0 q htil_q = -sum_{i>=1} A_i (q-i) htil_{q-i} + sum_i B_i htil_{q-1-i}
        Real acc(prec_);
        for (size_t i = 1; i < A_.size(); ++i) {
            long idx = q - static_cast<long>(i);
            if (idx < 0) break;
            acc -= A_[i] * idx * at(idx);
        }
        for (size_t i = 0; i < B_.size(); ++i) {
            long idx = q - 1 - static_cast<long>(i);
            if (idx < 0) break;
            acc += B_[i] * at(idx);
        }
        Real val = acc / (A_[0] * q);
        push(val);
        return val * wm_;
    }

  private:
    void push(const Real& v) {
        hist_.insert(hist_.begin(), v);
        hist_.pop_back();
    }
    mpfr_prec_t prec_;
    Real wm_;
    int shift_ = 0, n_ = 0;
    size_t depth_;
    std::vector<Real> A_, B_;
    std::vector<Real> hist_;
};

constexpr int kMaxTerms = 200000;

} // namespace

Complex phi_eval(const Complex& z, const Real& w, int r, const EntireFn& F, GgfKind kind) {
    if (!(w > 0L)) throw domain_error("phi_eval: w must be positive");
    mpfr_prec_t prec = z.prec();
    if (z.is_zero()) return Complex(to_real(F.maclaurin(0)[0], prec));

    WeightGen wg(w.to_prec(prec), kind, prec);
    CoefGen cg(w.to_prec(prec), r, F, prec);
    double zd = abs(z).to_double();
    double wd = w.to_double();

    Real tol = ldexp(Real(1L, prec), -(static_cast<long>(prec) - 8));
    Complex sum(prec);
    Complex zp(1L, prec);
    int small_run = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        Real weight = wg.next();
        Complex term = zp * (cg.next() * weight);
        sum = sum + term;
        zp = zp * z;
        // stop once 8 consecutive terms are negligible and the weight decay
        // has taken over (n e^{n w} > 2|z|)
        Real mag = abs(term);
        if (mag <= tol * max(abs(sum), tol)) ++small_run;
        else small_run = 0;
        if (small_run >= 8 && static_cast<double>(n) > 2.0 * zd * std::exp(-n * wd)) break;
        if (n == kMaxTerms - 1)
            throw convergence_error("phi_eval: series truncation bound not reached",
                                    mag.to_double());
    }
    return sum;
}

Real phi_eval(const Real& z, const Real& w, int r, const EntireFn& F, GgfKind kind) {
    return phi_eval(Complex(z), w, r, F, kind).re();
}

Real root_asymptotic(int j, const Real& w, int r01, const EntireFn& F, mpfr_prec_t prec) {
    if (r01 != 0 && r01 != 1) throw domain_error("root_asymptotic: r must be 0 or 1");
    Real a = ai_root(j, r01 == 1, prec);
    Real wp = w.to_prec(prec);
    Real c = pow(Real(2L, prec), -(Real(1L, prec) / 3L));
    Real ratio = F.dvalue1(prec) / F.value1(prec);
    Real corr = (r01 == 0) ? -(wp * (Real(1L, prec) / 6L - ratio))
                           : wp * (Real(1L, prec) / 6L + ratio);
    Real w23 = pow(wp, Real(2L, prec) / 3L);
    return (Real(1L, prec) - c * a * w23 + corr) / (euler_e(prec) * wp);
}

namespace {

// analytic z-derivative via the explicit identity
// dz phi_r = (1/z)(-r phi_{r-1}(.; xF) - (1/w) phi_r(.; xF) + phi_r(.; xF'))
Real dphi_analytic(const Real& z, const Real& w, int r, const EntireFn& F, GgfKind kind) {
    EntireFn xF = F.times_x();
    EntireFn xdF = F.x_dfdx();
    Real t2 = phi_eval(z, w, r, xF, kind) / w.to_prec(z.prec());
    Real t3 = phi_eval(z, w, r, xdF, kind);
    Real acc = t3 - t2;
    if (r != 0) acc = acc - phi_eval(z, w, r - 1, xF, kind) * static_cast<long>(r);
    return acc / z;
}

} // namespace

Real find_root(int j, const Real& w, int r01, const EntireFn& F, GgfKind kind,
               int target_digits) {
    if (r01 != 0 && r01 != 1) throw domain_error("find_root: r must be 0 or 1");
    if (j < 1 || j > 5) throw domain_error("find_root: j in [1, 5] supported");
    if (!F.rootfinding_safe())
        throw domain_error("find_root: F must be nonvanishing off the origin "
                           "(monomial polynomial part)");
    double wd = w.to_double();
    // cancellation within phi near its first roots is about e^{1/(2w)} against
    // a value of the same scale; the root condition number adds another
    // e^{1/(2w)}
    mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(target_digits * 3.33) + 96 + static_cast<mpfr_prec_t>(1.5 / wd);
    Real wp = w.to_prec(prec);
    auto f = [&](const Real& x) { return phi_eval(x, wp, r01, F, kind); };

    Real lo(prec), hi(prec);
    if (wd <= 0.05) {
        // bracket from the asymptotic neighbor midpoints (in Airy-zero space)
        Real aj = ai_root(j, r01 == 1, prec);
        Real anext = ai_root(j + 1, r01 == 1, prec);
        Real aprev = j > 1 ? ai_root(j - 1, r01 == 1, prec) : Real(prec);
        Real c = pow(Real(2L, prec), -(Real(1L, prec) / 3L));
        Real w23 = pow(wp, Real(2L, prec) / 3L);
        Real ew = euler_e(prec) * wp;
        auto loc = [&](const Real& a) { return (Real(1L, prec) - c * a * w23) / ew; };
        lo = loc((aj + aprev) / 2L);
        hi = loc((aj + anext) / 2L);
    } else {
        // scan upward for the j-th sign change; evaluations are cheap here
        Real x = Real(0.05, prec) / wp;
        Real fx = f(x);
        int sign = fx.sign();
        int found = 0;
        Real step = Real(0.04, prec) / wp;
        Real prev = x;
        for (int it = 0; it < 4000; ++it) {
            x = x + step;
            Real fn = f(x);
            if (fn.sign() != sign) {
                ++found;
                if (found == j) {
                    lo = prev;
                    hi = x;
                    break;
                }
                sign = fn.sign();
            }
            prev = x;
        }
        if (found != j)
            throw convergence_error("find_root: scan found no sign change for root index",
                                    static_cast<double>(found));
    }

    Real flo = f(lo), fhi = f(hi);
    if (flo.sign() == fhi.sign())
        throw convergence_error(
            "find_root: seed bracket carries no sign change (basin ambiguity); "
            "reduce w or raise precision", 0.0);

    Real x = (lo + hi) / 2L;
    Real tol = abs(x) * pow(Real(10L, prec), -static_cast<long>(target_digits + 2));
    for (int it = 0; it < 300; ++it) {
        Real fx = f(x);
        if (fx.sign() == flo.sign()) lo = x;
        else hi = x;
        Real dfx = dphi_analytic(x, wp, r01, F, kind);
        Real nx(prec);
        bool ok = !dfx.is_zero();
        if (ok) {
            nx = x - fx / dfx;
            ok = nx >= lo && nx <= hi;
        }
        if (!ok) nx = (lo + hi) / 2L;
        if (abs(nx - x) <= tol) return nx;
        x = nx;
    }
    throw convergence_error("find_root: Newton did not converge", 0.0);
}

DPhiAtRoot dphi_at_root(int j, const Real& w, int r01, const EntireFn& F, int k, GgfKind kind,
                        int target_digits) {
    if (k < 1) throw domain_error("dphi_at_root: derivative order must be >= 1");
    Real rt = find_root(j, w, r01, F, kind, target_digits);
    mpfr_prec_t prec = rt.prec();
    Real wp = w.to_prec(prec);

    // numeric route: k-fold term-wise derivative of the Hadamard series,
    // realized through the analytic identity applied k times for k = 1 and
    // direct series differentiation otherwise
    Real numeric(prec);
    if (k == 1) {
        numeric = dphi_analytic(rt, wp, r01, F, kind);
    } else {
        // differentiate the defining series term-wise k times:
        // sum_n c_n weight(n) n!/(n-k)! z^{n-k}
        WeightGen wg(wp, kind, prec);
        double zd = rt.to_double(), wd = wp.to_double();
        CoefGen cg(wp, r01, F, prec);
        Real tol = ldexp(Real(1L, prec), -(static_cast<long>(prec) - 8));
        Real sum(prec), zp(1L, prec);
        int small_run = 0;
        for (int n = 0; n < kMaxTerms; ++n) {
            Real weight = wg.next();
            Real cn = cg.next();
            if (n < k) continue;
            Real fall(1L, prec);
            for (int m = 0; m < k; ++m) fall = fall * (n - m);
            Real term = cn * weight * fall * zp;
            sum += term;
            zp = zp * rt;
            Real mag = abs(term);
            if (mag <= tol * max(abs(sum), tol)) ++small_run;
            else small_run = 0;
            if (small_run >= 8 && static_cast<double>(n) > 2.0 * zd * std::exp(-n * wd)) break;
        }
        numeric = sum;
    }

    // asymptotic route
    Real f1 = F.value1(prec), df1 = F.dvalue1(prec);
    Real ratio = df1 / f1;
    Real c13 = pow(Real(2L, prec), -(Real(1L, prec) / 3L));
    Real asym(prec);
    if (r01 == 0) {
        if (k != 1)
            throw domain_error("dphi_at_root: asymptotic form for r=0 covers k=1 only");
        Real a = ai_root(j, false, prec);
        Real kappa = sqrt(pi(prec) * 2L) * pow(Real(2L, prec), Real(2L, prec) / 3L) *
                     exp(Real(7L, prec) / 6L) * ai_prime(a);
        Real w16 = pow(wp, Real(1L, prec) / 6L);
        asym = -(kappa * w16 * exp(-(1L / (wp * 2L)) + c13 * a / root(wp, 3) - ratio) * f1);
    } else {
        Real ap = ai_root(j, true, prec);
        Real kappa = sqrt(pi(prec) * 2L) * 2L * ap * ai(ap);
        Real sgn((k + 1) % 2 == 0 ? 1L : -1L, prec);
        asym = sgn * static_cast<long>(k) * sqrt(wp) * kappa * f1 *
               exp(-(1L / (wp * 2L)) + c13 * ap / root(wp, 3) -
                   (Real(1L, prec) / 6L + ratio) + static_cast<long>(k));
    }
    if (kind == GgfKind::SimpleGraphic) {
        // the simple-graphic derivative picks up e^{-1/4} (r=0: e^{7/6} -> e^{11/12})
        asym = asym * exp(Real(-1L, prec) / 4L);
    }
    return {numeric, asym};
}

Complex uniform_approx(ApproxPart part, const Complex& z, const Real& w, int r,
                       const EntireFn& F, GgfKind kind) {
    mpfr_prec_t prec = z.prec();
    Real wp = w.to_prec(prec);
    Complex zw = z * Complex(wp);
    Real e = euler_e(prec);
    Complex one(1L, prec);

    Real simple_a(1L, prec);
    if (part == ApproxPart::A && kind == GgfKind::SimpleGraphic) {
        // handled below once U(zw) is known
    }

    if (part == ApproxPart::A || part == ApproxPart::B) {
        Complex t = tree_eval(TreeKind::Rooted, zw);
        Complex u = t - t * t / 2L;
        double dist = (1.0 - abs(t).to_double());
        double w13 = std::pow(wp.to_double(), 1.0 / 3.0);
        if (part == ApproxPart::A) {
            if (dist < std::pow(wp.to_double(), 1.0 / 3.0 - 1.0 / 12.0))
                throw domain_error("uniform_approx part (a): 1-|T(zw)| >= w^{1/3-eps} violated");
            Complex pw = exp(log(one - t) * Complex(Real(static_cast<long>(r), prec) - Real(1L, prec) / 2L));
            Complex val = exp(-(u / wp)) * pw * F.eval(t);
            if (kind == GgfKind::SimpleGraphic) val = val * exp(-(u / 2L));
            return val;
        }
        // part (b)
        if (dist < w13 || dist > std::pow(wp.to_double(), 1.0 / 3.0 - 1.0 / 12.0))
            throw domain_error(
                "uniform_approx part (b): w^{1/3} <= 1-|T(zw)| <= w^{1/3-eps} violated");
        Complex theta = (one - t) / Complex(root(wp, 3));
        Complex c223 = Complex(pow(Real(2L, prec), -(Real(2L, prec) / 3L)));
        Complex aiv = ai_general(r, c223 * theta * theta);
        Real pref = sqrt(pi(prec) * 2L) *
                    pow(Real(2L, prec), Real(static_cast<long>(r), prec) / 3L + Real(1L, prec) / 3L) *
                    pow(wp, Real(static_cast<long>(r), prec) / 3L - Real(1L, prec) / 6L);
        Complex val = aiv * Complex(pref * F.value1(prec)) *
                      exp(theta * theta * theta / 3L - u / wp);
        if (r % 2 != 0) val = -val;
        if (kind == GgfKind::SimpleGraphic) val = val * Complex(exp(Real(-1L, prec) / 4L));
        return val;
    }

    // parts (c), (c refined): 1 - ezw = tau w^{2/3}
    Complex tau = (one - zw * Complex(e)) / Complex(pow(wp, Real(2L, prec) / 3L));
    if (abs(tau) > Real(10L, prec))
        throw domain_error("uniform_approx part (c): tau = (1-ezw) w^{-2/3} not bounded");
    Real c13 = root(Real(2L, prec), 3);
    Complex arg = Complex(c13) * tau;
    Real pref = sqrt(pi(prec) * 2L) *
                pow(Real(2L, prec), Real(static_cast<long>(r), prec) / 3L + Real(1L, prec) / 3L) *
                pow(wp, Real(static_cast<long>(r), prec) / 3L - Real(1L, prec) / 6L);
    Complex expo = exp(Complex(-(1L / (wp * 2L))) + tau / Complex(root(wp, 3)));
    Complex core(prec);
    if (part == ApproxPart::C) {
        core = ai_general(r, arg) * Complex(F.value1(prec));
    } else {
        if (r != 0 && r != 1)
            throw domain_error("uniform_approx part (c refined): r must be 0 or 1");
        Real f1 = F.value1(prec), df1 = F.dvalue1(prec);
        Complex aiv = ai_general(0, arg), aipv = ai_general(1, arg);
        Real w13 = root(wp, 3);
        if (r == 0) {
            Complex k1 = tau * tau * Complex(f1 * Real(5L, prec) / 6L) * aiv -
                         aipv * Complex(c13 * f1 / 6L) + aipv * Complex(c13 * df1);
            core = aiv * Complex(f1) + k1 * Complex(w13);
        } else {
            Complex k1 = tau * Complex((f1 + df1 * 6L) / (c13 * 3L)) * aiv +
                         tau * tau * Complex(f1 * Real(5L, prec) / 6L) * aipv;
            core = aipv * Complex(f1) + k1 * Complex(w13);
        }
    }
    Complex val = core * Complex(pref) * expo;
    if (r % 2 != 0) val = -val;
    if (kind == GgfKind::SimpleGraphic) val = val * Complex(exp(Real(-1L, prec) / 4L));
    return val;
}

} // namespace dgp
