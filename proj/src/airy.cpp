#include "dgp/airy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "dgp/convert.hpp"
#include "dgp/errors.hpp"
#include "dgp/quadrature.hpp"
#include "dgp/rational.hpp"

namespace dgp {

namespace {

// Guard bits for the series route: terms peak near exp((2/3)|z|^{3/2})
// while the value can be as small as exp(-(2/3)|z|^{3/2}).
mpfr_prec_t series_work_prec(mpfr_prec_t prec, const Real& zabs) {
    double z = std::max(0.0, zabs.to_double());
    return prec + 64 + static_cast<mpfr_prec_t>(2.0 * z * std::sqrt(z));
}

// Guard bits for the contour route, direction-aware: the integrand peaks
// where Re(-z t + t^3/3) is largest over Pi(pi/3), while log|Ai(k;z)| is
// near Re(-(2/3) z^{3/2}); the difference is the cancellation the
// quadrature has to resolve.
mpfr_prec_t contour_work_prec(mpfr_prec_t prec, const Complex& z) {
    double re = z.re().to_double(), im = z.im().to_double();
    double c1 = -(re * 0.5 + im * 0.8660254037844386);  // ray t = e^{-i pi/3} s
    double c2 = -(re * 0.5 - im * 0.8660254037844386);  // ray t = e^{i pi/3} s
    double peak = 0.0;
    for (double c : {c1, c2})
        peak = std::max(peak, c > 0 ? (2.0 / 3.0) * c * std::sqrt(c) : 0.0);
    // middle segment t = 1/2 + i y, |y| <= sin(pi/3): Re(t^3/3) <= 1/3
    peak = std::max(peak, -0.5 * re + 0.8660254037844386 * std::abs(im) + 1.0 / 3.0);
    double r = std::hypot(re, im), th = std::atan2(im, re);
    double growth = -(2.0 / 3.0) * r * std::sqrt(r) * std::cos(1.5 * th);
    double cancel = std::max(0.0, peak - growth);
    return prec + 64 + static_cast<mpfr_prec_t>(1.45 * cancel);
}

// ------------------------------------------------------- asymptotic series
//
// Ai(k; z) = (-1)^k/(2 sqrt(pi)) z^{k/2 - 1/4} e^{-zeta} P_k(v) with
// zeta = (2/3) z^{3/2}, v = z^{-3/2}, P_k a formal power series with
// rational coefficients. The derivative identity d/dz Ai(k;z) = Ai(k+1;z)
// gives the exact coefficient recurrences
//   up:   P_{k+1,j} = P_{k,j} + ((3/2)(j-1) - a_k) P_{k,j-1}
//   down: P_{k,j}   = P_{k+1,j} - ((3/2)(j-1) - a_k) P_{k,j-1}
// with a_k = k/2 - 1/4 and P_{k,0} = 1; P_0 itself follows from
// Ai(2; z) = z Ai(z). Every Ai(k; .) decays to 0 as z -> +inf (by the
// recurrence and induction), so no integration constants enter and the
// expansion matches the contour normalization for k < 0.

std::mutex asym_mutex;
std::map<long, std::vector<Rat>> asym_cache;
constexpr int kAsymOrder = 400;

std::vector<Rat> asym_up(const std::vector<Rat>& p, long k) {
    Rat ak(2 * k - 1, 4);
    std::vector<Rat> q(p.size());
    q[0] = p[0];
    for (size_t j = 1; j < p.size(); ++j)
        q[j] = p[j] + (Rat(3 * (static_cast<long>(j) - 1), 2) - ak) * p[j - 1];
    return q;
}

const std::vector<Rat>& asym_P(long k) {
    std::lock_guard<std::mutex> lock(asym_mutex);
    auto it = asym_cache.find(k);
    if (it != asym_cache.end()) return it->second;
    if (asym_cache.find(0) == asym_cache.end()) {
        // determine P_0 from up(up(P_0)) = P_0 order by order
        std::vector<Rat> p0(kAsymOrder + 1);
        p0[0] = Rat(1);
        Rat a0(-1, 4), a1(1, 4);
        for (size_t j = 2; j <= kAsymOrder; ++j) {
            // [v^j] of up(up(p0)) - p0 = 0 determines p0[j-1]
            long jj = static_cast<long>(j);
            Rat c1 = Rat(3 * (jj - 1), 2) - a1;
            Rat c0 = Rat(3 * (jj - 2), 2) - a0;
            // up2_j = p_j + ((3(j-1) - a0 - a1)) p_{j-1} + c1 c0 p_{j-2}
            Rat lin = Rat(3 * (jj - 1)) - a0 - a1; // = 3(j-1) since a0+a1 = 0
            p0[j - 1] = -(c1 * c0 * p0[j - 2]) / lin;
        }
        p0.resize(kAsymOrder);
        asym_cache.emplace(0, std::move(p0));
    }
    if (k > 0) {
        const std::vector<Rat>* cur = &asym_cache.at(0);
        long have = 0;
        for (auto kk = asym_cache.rbegin(); kk != asym_cache.rend(); ++kk)
            if (kk->first <= k && kk->first > have && kk->first > 0) { have = kk->first; cur = &kk->second; }
        std::vector<Rat> p = *cur;
        for (long m = have; m < k; ++m) p = asym_up(p, m);
        auto [pos, ok] = asym_cache.emplace(k, std::move(p));
        (void)ok;
        return pos->second;
    }
    // downward from the smallest cached non-positive order
    long have = 0;
    for (auto& [kk, vv] : asym_cache)
        if (kk <= 0 && kk < have) have = kk;
    std::vector<Rat> p = asym_cache.at(have);
    for (long m = have; m > k; --m) {
        Rat ak(2 * (m - 1) - 1, 4); // a_{m-1}
        std::vector<Rat> q(p.size());
        q[0] = p[0];
        for (size_t j = 1; j < p.size(); ++j)
            q[j] = p[j] - (Rat(3 * (static_cast<long>(j) - 1), 2) - ak) * q[j - 1];
        p = std::move(q);
    }
    auto [pos, ok] = asym_cache.emplace(k, std::move(p));
    (void)ok;
    return pos->second;
}

std::mutex asym_real_mutex;
std::map<std::pair<long, mpfr_prec_t>, std::vector<Real>> asym_real_cache;

const std::vector<Real>& asym_P_real(long k, mpfr_prec_t wp) {
    std::lock_guard<std::mutex> lock(asym_real_mutex);
    auto key = std::make_pair(k, wp);
    auto it = asym_real_cache.find(key);
    if (it != asym_real_cache.end()) return it->second;
    const std::vector<Rat>& P = asym_P(k);
    std::vector<Real> out;
    out.reserve(P.size());
    for (const auto& c : P) out.push_back(to_real(c, wp));
    auto [pos, ok] = asym_real_cache.emplace(key, std::move(out));
    (void)ok;
    return pos->second;
}

// Large-|z| evaluation through the asymptotic expansion. Returns false if
// the series floor cannot certify the requested precision (caller then
// falls back to the contour).
bool ai_asym_eval(long k, const Complex& z0, Complex& out) {
    mpfr_prec_t target = z0.prec();
    double r = abs(z0).to_double();
    double zeta_abs = (2.0 / 3.0) * r * std::sqrt(r);
    double th = std::abs(std::atan2(z0.im().to_double(), z0.re().to_double()));
    if (th > 2.7) return false; // too close to the negative axis
    // smallest term ~ e^{-2|zeta|}; demand it certifiably below the target
    if (1.8 * zeta_abs < 0.6931 * static_cast<double>(target + 16)) return false;

    mpfr_prec_t wp = ((target + 64 + 63) / 64) * 64;
    Complex z(z0.re().to_prec(wp), z0.im().to_prec(wp));
    Complex lz = log(z);
    Complex w32 = exp(lz * (Real(3L, wp) / 2L)); // z^{3/2}
    Complex zeta = w32 * 2L / 3L;
    Complex v = reciprocal(w32);
    const std::vector<Real>& P = asym_P_real(k, wp);
    Complex sum(1L, wp), vp(1L, wp);
    Real eps = ldexp(Real(1L, wp), -(static_cast<long>(target) + 16));
    Real prev_mag(wp);
    bool ok = false;
    for (size_t j = 1; j < P.size(); ++j) {
        vp = vp * v;
        Complex term = vp * P[j];
        Real mag = abs(term);
        if (j > 1 && mag > prev_mag && mag > eps) { ok = mag < eps; break; }
        sum = sum + term;
        prev_mag = mag;
        if (mag < eps) { ok = true; break; }
    }
    if (!ok) return false;
    Real kk(wp);
    mpfr_set_si(kk.raw(), k, MPFR_RNDN);
    Complex pref = exp(lz * (kk / 2L - Real(1L, wp) / 4L) - zeta);
    Complex val = pref * sum / (sqrt(pi(wp)) * 2L);
    if (k & 1L) val = -val;
    out = Complex{val.re().to_prec(target), val.im().to_prec(target)};
    return true;
}

// ---------------------------------------------------------------- series

// Maclaurin evaluation of Ai(k; z) for k >= 0. Coefficients follow
// a_n = a_{n-3} / (n (n-1)) with a_0 = 3^{-2/3}/Gamma(2/3),
// a_1 = -3^{-1/3}/Gamma(1/3), a_2 = 0.
Complex ai_series(long k, const Complex& z0) {
    mpfr_prec_t target = z0.prec();
    mpfr_prec_t wp = series_work_prec(target, abs(z0));
    Complex z(z0.re().to_prec(wp), z0.im().to_prec(wp));

    Real third = Real(1L, wp) / 3L;
    Real a0 = pow(Real(3L, wp), -(Real(2L, wp) / 3L)) / gamma(Real(2L, wp) / 3L);
    Real a1 = -pow(Real(3L, wp), -third) / gamma(third);

    Real eps = ldexp(Real(1L, wp), -(static_cast<long>(wp) - 4));
    Complex sum(wp);
    Complex zp(1L, wp); // z^j
    // a_0..a_{k+2} so the rolling lanes can start at index k
    std::vector<Real> a;
    a.reserve(static_cast<size_t>(k) + 8);
    a.push_back(a0);
    a.push_back(a1);
    a.push_back(Real(wp));
    for (long n = 3; n <= k + 2; ++n) a.push_back(a[static_cast<size_t>(n - 3)] / (n * (n - 1)));
    Real lane0 = a[static_cast<size_t>(k)];      // a_{j+k}
    Real lane1 = a[static_cast<size_t>(k + 1)];
    Real lane2 = a[static_cast<size_t>(k + 2)];
    Real fall(1L, wp); // (j+k)!/j!
    for (long m = 1; m <= k; ++m) fall = fall * m;

    Real maxmag(wp);
    int small_run = 0;
    for (long j = 0; j < 40000; ++j) {
        Complex term = zp * (lane0 * fall);
        sum = sum + term;
        Real mag = abs(term);
        maxmag = max(maxmag, mag);
        if (j > 4 && mag < eps * maxmag)
            ++small_run;
        else
            small_run = 0;
        if (small_run >= 4) break;
        Real next = lane0 / ((j + k + 3) * (j + k + 2)); // a_{j+k+3}
        lane0 = lane1;
        lane1 = lane2;
        lane2 = next;
        fall = fall * (j + 1 + k) / (j + 1);
        zp = zp * z;
    }
    return {sum.re().to_prec(target), sum.im().to_prec(target)};
}

// ---------------------------------------------------------------- contour

struct ContourNode {
    Complex t;
    Complex pref; // e^{t^3/3} * dt * weight
};

struct ContourPlan {
    std::vector<ContourNode> nodes;
};

std::mutex plan_mutex;
std::map<std::tuple<mpfr_prec_t, int, long>, ContourPlan> plan_cache;

// ray length so that exp(-T^3/3 + |z| T) is below 2^{-(wp+16)}
Real contour_T(const Real& zabs, mpfr_prec_t wp) {
    Real l2(wp);
    mpfr_const_log2(l2.raw(), MPFR_RNDN);
    Real L = l2 * static_cast<long>(wp + 16) + 10L;
    Real T = root(L * 3L, 3) + 1L;
    for (int it = 0; it < 30; ++it) T = root((L + zabs * T) * 3L, 3);
    return T + 1L;
}

const ContourPlan& contour_plan(mpfr_prec_t wp, int level, const Real& T) {
    long tkey = (T * 16L).to_long();
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(wp, level, tkey);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    ContourPlan plan;
    Real half(wp);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    Real s3 = sqrt(Real(3L, wp)) / 2L; // sin(pi/3)
    Complex eip{half, s3};             // e^{i pi/3}
    Complex eim = eip.conj();          // e^{-i pi/3}
    Complex i_sin{Real(wp), s3};

    const auto& ts = tanh_sinh_nodes(wp, level);
    auto add_segment = [&](const Real& a, const Real& b, auto to_t, const Complex& dt) {
        Real mid = (a + b) / 2L, hl = (b - a) / 2L;
        for (const auto& nd : ts) {
            Real s = mid + hl * nd.x;
            Complex t = to_t(s);
            Complex p = exp(pow_int(t, 3) / 3L) * (dt * (nd.w * hl));
            plan.nodes.push_back({t, p});
        }
    };
    // s in [-T,-1]: t = -e^{-i pi/3} s
    add_segment(-T, Real(-1L, wp), [&](const Real& s) { return -(eim * s); }, -eim);
    // s in [-1,1]: t = cos(pi/3) + i s sin(pi/3)
    add_segment(Real(-1L, wp), Real(1L, wp),
                [&](const Real& s) { return Complex{half, s3 * s}; }, i_sin);
    // s in [1,T]: t = e^{i pi/3} s
    add_segment(Real(1L, wp), T, [&](const Real& s) { return eip * s; }, eip);

    auto [pos, ok] = plan_cache.emplace(key, std::move(plan));
    (void)ok;
    return pos->second;
}

// Ai(k;z) for all k in ks over one contour pass at a fixed plan.
std::vector<Complex> contour_eval(const std::vector<long>& ks, const Complex& z,
                                  const ContourPlan& plan, mpfr_prec_t wp) {
    long kmin = *std::min_element(ks.begin(), ks.end());
    long kmax = *std::max_element(ks.begin(), ks.end());
    std::vector<Complex> acc(ks.size(), Complex(wp));
    std::vector<Complex> powers(static_cast<size_t>(kmax - kmin) + 1, Complex(wp));
    for (const auto& nd : plan.nodes) {
        Complex e = exp(-(z * nd.t)) * nd.pref;
        powers[0] = pow_int(nd.t, kmin);
        for (long k = kmin + 1; k <= kmax; ++k)
            powers[static_cast<size_t>(k - kmin)] = powers[static_cast<size_t>(k - kmin - 1)] * nd.t;
        for (size_t i = 0; i < ks.size(); ++i)
            acc[i] = acc[i] + e * powers[static_cast<size_t>(ks[i] - kmin)];
    }
    // (-1)^k/(2 pi i) prefactor
    Real tp = pi(wp) * 2L;
    for (size_t i = 0; i < ks.size(); ++i) {
        Complex v = acc[i] / tp;       // divide by 2 pi
        v = Complex{v.im(), -v.re()};  // divide by i
        if (ks[i] & 1L) v = -v;
        acc[i] = v;
    }
    return acc;
}

std::vector<Complex> ai_contour_adaptive(const std::vector<long>& ks, const Complex& z0,
                                         int* level_out) {
    mpfr_prec_t target = z0.prec();
    Real za = abs(z0);
    mpfr_prec_t wp = contour_work_prec(target, z0);
    Complex z(z0.re().to_prec(wp), z0.im().to_prec(wp));
    Real T = contour_T(za.to_prec(wp), wp);
    Real tol = ldexp(Real(1L, wp), -(static_cast<long>(target) + 8));

    std::vector<Complex> prev;
    for (int level = 5; level <= 11; ++level) {
        std::vector<Complex> cur = contour_eval(ks, z, contour_plan(wp, level, T), wp);
        if (!prev.empty()) {
            bool ok = true;
            for (size_t i = 0; i < cur.size(); ++i) {
                Real err = abs(cur[i] - prev[i]);
                if (err > tol * max(abs(cur[i]), Real(1L, wp))) { ok = false; break; }
            }
            if (ok) {
                if (level_out) *level_out = level;
                for (auto& v : cur) v = Complex{v.re().to_prec(target), v.im().to_prec(target)};
                return cur;
            }
        }
        prev = std::move(cur);
    }
    throw convergence_error("ai_general: contour quadrature did not converge", 0.0);
}

std::vector<Complex> ai_contour_batch(const std::vector<long>& ks, const Complex& z0) {
    return ai_contour_adaptive(ks, z0, nullptr);
}

} // namespace

std::vector<Complex> ai_contour_batch_at(const std::vector<long>& ks, const Complex& z0,
                                         int level) {
    mpfr_prec_t target = z0.prec();
    Real za = abs(z0);
    mpfr_prec_t wp = contour_work_prec(target, z0);
    // quantize so the per-node plans are shared across nearby arguments
    wp = ((wp + 63) / 64) * 64;
    Complex z(z0.re().to_prec(wp), z0.im().to_prec(wp));
    Real T = contour_T(za.to_prec(wp), wp);
    T = floor(T / 4L + 1L) * 4L;
    std::vector<Complex> cur = contour_eval(ks, z, contour_plan(wp, level, T), wp);
    for (auto& v : cur) v = Complex{v.re().to_prec(target), v.im().to_prec(target)};
    return cur;
}

int ai_contour_pick_level(const std::vector<long>& ks, const Complex& z) {
    int level = 11;
    ai_contour_adaptive(ks, z, &level);
    return level;
}

bool ai_asym_try(long k, const Complex& z, Complex& out) { return ai_asym_eval(k, z, out); }

Complex ai_general(long k, const Complex& z) { return ai_general_batch({k}, z)[0]; }

Real ai_general(long k, const Real& z) { return ai_general(k, Complex(z)).re(); }

Complex ai(const Complex& z) { return ai_general(0, z); }
Complex ai_prime(const Complex& z) { return ai_general(1, z); }
Real ai(const Real& z) { return ai_general(0, Complex(z)).re(); }
Real ai_prime(const Real& z) { return ai_general(1, Complex(z)).re(); }

std::vector<Complex> ai_general_batch(const std::vector<long>& ks, const Complex& z) {
    std::vector<Complex> out(ks.size(), Complex(z.prec()));
    std::vector<long> rest;
    std::vector<size_t> rest_idx;
    // the Maclaurin route is fastest wherever its |z|^{3/2} guard bits stay
    // moderate; beyond that the asymptotic series or the contour take over
    bool small = abs(z) <= Real(40L, z.prec());
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] >= 0 && small) {
            out[i] = ai_series(ks[i], z);
            continue;
        }
        Complex v(z.prec());
        if (ai_asym_eval(ks[i], z, v)) {
            out[i] = v;
            continue;
        }
        rest.push_back(ks[i]);
        rest_idx.push_back(i);
    }
    if (!rest.empty()) {
        std::vector<Complex> cv = ai_contour_batch(rest, z);
        for (size_t j = 0; j < rest.size(); ++j) out[rest_idx[j]] = cv[j];
    }
    return out;
}

Complex ai_asymptotic(long k, const Complex& z) {
    if (z.im().is_zero() && z.re().sign() <= 0)
        throw domain_error("ai_asymptotic: argument on the negative real axis");
    Complex lz = log(z);
    mpfr_prec_t prec = z.prec();
    Real kk(prec);
    mpfr_set_si(kk.raw(), k, MPFR_RNDN);
    Complex zpow = exp(lz * (kk / 2L - Real(1L, prec) / 4L));
    Complex z32 = exp(lz * (Real(3L, prec) / 2L));
    Complex v = zpow * exp(-(z32 * 2L) / 3L) / (sqrt(pi(prec)) * 2L);
    if (k & 1L) v = -v;
    return v;
}

namespace {
std::mutex root_mutex;
std::map<std::pair<int, bool>, Real> root_cache; // at kRootCachePrec bits
constexpr mpfr_prec_t kRootCachePrec = 384;

Real ai_root_impl(int j, bool prime, mpfr_prec_t prec);
} // namespace

Real ai_root(int j, bool prime, mpfr_prec_t prec) {
    if (prec <= kRootCachePrec - 16) {
        std::lock_guard<std::mutex> lock(root_mutex);
        auto it = root_cache.find({j, prime});
        if (it == root_cache.end())
            it = root_cache.emplace(std::make_pair(j, prime),
                                    ai_root_impl(j, prime, kRootCachePrec)).first;
        return it->second.to_prec(prec);
    }
    return ai_root_impl(j, prime, prec);
}

namespace {
Real ai_root_impl(int j, bool prime, mpfr_prec_t prec) {
    if (j < 1) throw domain_error("ai_root: index must be >= 1");
    // evaluation noise sits near 2^{-wp}; keep it well below the step
    // tolerance 2^{-(prec+8)}
    mpfr_prec_t wp = prec + 64;
    // classical seeds: a_j ~ -T(3 pi (4j-1)/8), a_j' ~ -U(3 pi (4j-3)/8)
    Real t = pi(wp) * 3L * (4L * j - (prime ? 3L : 1L)) / 8L;
    Real t2 = t * t;
    Real u = pow(t, Real(2L, wp) / 3L);
    Real seed = prime ? -(u * (Real(1L, wp) - Real(7L, wp) / 48L / t2))
                      : -(u * (Real(1L, wp) + Real(5L, wp) / 48L / t2));

    auto f = [&](const Real& x) {
        Complex v = ai_general(prime ? 1 : 0, Complex(x));
        return v.re();
    };
    auto fp = [&](const Real& x) {
        if (!prime) return ai_prime(x);
        return x * ai(x); // Ai'' = z Ai
    };

    // bracket around the seed; consecutive roots are > 0.5 apart for j <= 60
    Real lo = seed - Real(0.1, wp), hi = seed + Real(0.1, wp);
    Real flo = f(lo), fhi = f(hi);
    int widen = 0;
    while (flo.sign() == fhi.sign() && widen < 4) {
        lo = lo - Real(0.1, wp);
        hi = hi + Real(0.1, wp);
        flo = f(lo);
        fhi = f(hi);
        ++widen;
    }
    if (flo.sign() == fhi.sign())
        throw convergence_error("ai_root: failed to bracket the requested zero", 0.0);

    Real x = seed;
    Real tol = ldexp(abs(seed), -(static_cast<long>(prec) + 8));
    for (int it = 0; it < 200; ++it) {
        Real fx = f(x);
        Real dfx = fp(x);
        bool accept = !dfx.is_zero();
        Real nx(wp);
        if (accept) {
            nx = x - fx / dfx;
            accept = nx >= lo && nx <= hi;
        }
        if (!accept) nx = (lo + hi) / 2L; // bisection fallback
        // maintain the bracket
        Real fnx = f(nx);
        if (fnx.sign() == flo.sign()) { lo = nx; flo = fnx; }
        else { hi = nx; fhi = fnx; }
        if (abs(nx - x) < tol) return nx.to_prec(prec);
        x = nx;
    }
    throw convergence_error("ai_root: Newton iteration did not converge", 0.0);
}
} // namespace

} // namespace dgp
