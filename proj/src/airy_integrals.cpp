#include "dgp/airy_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "dgp/airy.hpp"
#include "dgp/errors.hpp"
#include "dgp/quadrature.hpp"

namespace dgp {

namespace {

constexpr long kKMin = -16; // covers Ai(1-3r+d; .) down to r = 5, d = 0
constexpr long kKMax = 2;

// Values Ai(k; -2^{1/3}(theta + i t_j)) for the requested orders at the
// tanh-sinh nodes of [0, T] on the line Re s = theta. Shared by every
// kernel spec and every mu using the same orders on that line, so the
// expensive Airy evaluations happen once per node. Nodes where the net
// decay certifies a negligible integrand carry no values.
struct AxisNodeValues {
    Real t;
    Real w;
    bool skipped = false;
    std::vector<Complex> ai; // parallel to the requested ks list
};

std::mutex axis_mutex;
std::map<std::tuple<mpfr_prec_t, int, long, long, unsigned long, int>,
         std::vector<AxisNodeValues>> axis_cache;

unsigned long ks_mask(const std::vector<long>& ks) {
    unsigned long m = 0;
    for (long k : ks) m |= 1UL << (k - kKMin);
    return m;
}

const std::vector<AxisNodeValues>& axis_values(mpfr_prec_t inner_prec, int level, const Real& T,
                                               const Real& theta, const std::vector<long>& ks,
                                               int Q, double skip_nats) {
    long tkey = (T * 16L).to_long();
    long thkey = (theta * 16L).to_long();
    std::lock_guard<std::mutex> lock(axis_mutex);
    auto key = std::make_tuple(inner_prec, level, tkey, thkey, ks_mask(ks), Q);
    auto it = axis_cache.find(key);
    if (it != axis_cache.end()) return it->second;

    mpfr_prec_t wp = inner_prec;
    Real cbrt2 = root(Real(2L, wp), 3);
    Real half = T / 2L;
    Real re_part = -(cbrt2 * theta);
    double th_d = theta.to_double();

    // the net Airy decay, relative to the t = 0 value of the line
    double base = (2.0 / 3.0) * Q * std::pow(std::abs(th_d), 1.5);
    auto negligible = [&](double t) {
        double r = std::pow(t * t + th_d * th_d, 0.75);
        return (2.0 / 3.0) * Q * r - base > skip_nats;
    };

    // fix the inner contour level once, probing at the largest live node
    // still below the asymptotic-series takeover radius
    const auto& nodes = tanh_sinh_nodes(wp, level);
    int inner_level = 0;
    {
        double z_asym =
            std::pow(0.6931 * static_cast<double>(wp + 16) / 1.8 * 1.5, 2.0 / 3.0);
        double teff = 0.0;
        double c2 = std::cbrt(2.0);
        for (const auto& nd : nodes) {
            double t = (half + half * nd.x).to_double();
            if (negligible(t)) continue;
            double zr = c2 * std::hypot(t, th_d);
            if (zr < z_asym) teff = std::max(teff, t);
        }
        if (teff > 0.0) {
            Complex zprobe{re_part, -(cbrt2 * Real(teff, wp))};
            Complex dummy(wp);
            bool all_asym = true;
            for (long k : ks)
                if (!ai_asym_try(k, zprobe, dummy)) all_asym = false;
            if (!all_asym) inner_level = ai_contour_pick_level(ks, zprobe) + 1;
        }
    }

    std::vector<AxisNodeValues> vals;
    for (const auto& nd : nodes) {
        Real t = half + half * nd.x; // map [-1,1] -> [0,T]
        AxisNodeValues v{t, nd.w * half, false, {}};
        if (negligible(t.to_double())) {
            v.skipped = true;
            vals.push_back(std::move(v));
            continue;
        }
        Complex z{re_part, -(cbrt2 * t)}; // -2^{1/3}(theta + i t)
        v.ai.assign(ks.size(), Complex(wp));
        std::vector<long> rest;
        std::vector<size_t> rest_idx;
        for (size_t i = 0; i < ks.size(); ++i) {
            if (ai_asym_try(ks[i], z, v.ai[i])) continue;
            rest.push_back(ks[i]);
            rest_idx.push_back(i);
        }
        if (!rest.empty()) {
            std::vector<Complex> cv = inner_level > 0 ? ai_contour_batch_at(rest, z, inner_level)
                                                      : ai_general_batch(rest, z);
            for (size_t j = 0; j < rest.size(); ++j) v.ai[rest_idx[j]] = cv[j];
        }
        vals.push_back(std::move(v));
    }
    auto [pos, ok] = axis_cache.emplace(key, std::move(vals));
    (void)ok;
    return pos->second;
}

std::pair<int, int> spec_powers(const AiryKernelSpec& spec) {
    int pden = 0, pnum = 0;
    for (auto& [k, p] : spec.denom) {
        if (k < kKMin || k > kKMax || p <= 0)
            throw domain_error("contour_integral: unsupported Airy order or power");
        pden += p;
    }
    for (auto& [k, p] : spec.numer) {
        if (k < kKMin || k > kKMax || p <= 0)
            throw domain_error("contour_integral: unsupported Airy order or power");
        pnum += p;
    }
    // each Ai factor grows like exp((2/3) t^{3/2}) along the axis, so decay
    // requires more denominator than numerator power
    if (pden <= pnum)
        throw domain_error("contour_integral: integrand does not decay along the axis");
    return {pden, pnum};
}

Real integrate_on_line(const AiryKernelSpec& spec, const Real& tol, double theta) {
    auto [pden, pnum] = spec_powers(spec);
    int Q = pden - pnum;
    mpfr_prec_t target = tol.prec();
    double mu = spec.tilt_mu;
    double tol_d = std::max(tol.to_double(), 1e-300);
    // residual cancellation: the e^{-mu^3/6} tilt against the oscillatory
    // integral when the line is not saddle-shifted, a small margin when it is
    double cancel_bits = 32.0;
    if (theta == 0.0 && mu < 0)
        cancel_bits += 1.45 * (-mu) * mu * mu / 6.0;
    else
        cancel_bits += 2.0 * std::abs(mu);
    mpfr_prec_t wp = ((static_cast<mpfr_prec_t>(-std::log2(tol_d) + cancel_bits) + 64 + 63) / 64) * 64;
    // node values need the same headroom: their relative errors survive the
    // cancelling summation
    mpfr_prec_t inner_prec = wp;

    // tail cutoff from the net decay exp(-(2/3) Q t^{3/2}), plus the width
    // of the saddle bump when shifted
    double skip_nats = -std::log(tol_d) + 0.6931 * cancel_bits + 10.0;
    double T_d = std::pow(1.5 * skip_nats / Q, 2.0 / 3.0) + 2.0 + 2.0 * std::sqrt(std::abs(theta));
    Real T(4.0 * std::ceil(T_d / 4.0), inner_prec);
    Real th(theta, inner_prec);

    // the orders this kernel touches
    std::vector<long> ks;
    for (auto& [k, p] : spec.numer)
        if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    for (auto& [k, p] : spec.denom)
        if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    std::sort(ks.begin(), ks.end());
    std::vector<size_t> num_idx, den_idx;
    for (auto& [k, p] : spec.numer)
        num_idx.push_back(static_cast<size_t>(std::find(ks.begin(), ks.end(), k) - ks.begin()));
    for (auto& [k, p] : spec.denom)
        den_idx.push_back(static_cast<size_t>(std::find(ks.begin(), ks.end(), k) - ks.begin()));

    Real mu_r(mu, wp);
    Real tilt0 = -(mu_r * mu_r * mu_r) / 6L - mu_r * th.to_prec(wp);
    Real tol_w = tol.to_prec(wp);

    Real prev(wp);
    bool have_prev = false;
    for (int level = 5; level <= 11; ++level) {
        const auto& vals = axis_values(inner_prec, level, T, th, ks, Q, skip_nats);
        Real acc(wp);
        for (const auto& v : vals) {
            if (v.skipped) continue;
            // s = theta + i t: e^{-mu s - mu^3/6} = exp(tilt0 - i mu t)
            Complex f = exp(Complex{tilt0, -(mu_r * v.t.to_prec(wp))});
            for (size_t i = 0; i < spec.numer.size(); ++i) {
                Complex a{v.ai[num_idx[i]].re().to_prec(wp), v.ai[num_idx[i]].im().to_prec(wp)};
                for (int q = 0; q < spec.numer[i].second; ++q) f = f * a;
            }
            for (size_t i = 0; i < spec.denom.size(); ++i) {
                Complex a{v.ai[den_idx[i]].re().to_prec(wp), v.ai[den_idx[i]].im().to_prec(wp)};
                for (int q = 0; q < spec.denom[i].second; ++q) f = f / a;
            }
            acc += f.re() * v.w.to_prec(wp);
        }
        // (1/2 pi i) over the full line = (1/pi) Re of the upper half
        acc = acc / pi(wp);
        if (have_prev) {
            Real err = abs(acc - prev);
            if (err <= tol_w * max(abs(acc), ldexp(Real(1L, wp), -static_cast<long>(target))))
                return (acc * Real(spec.prefactor, wp)).to_prec(target);
        }
        prev = acc;
        have_prev = true;
    }
    throw convergence_error("contour_integral: quadrature did not converge", 0.0);
}

} // namespace

Real contour_integral(const AiryKernelSpec& spec, const Real& tol) {
    auto [pden, pnum] = spec_powers(spec);
    int Q = pden - pnum;
    double mu = spec.tilt_mu;
    // saddle-shift the line for strongly negative mu, where the vertical
    // axis suffers e^{|mu|^3/6}-scale cancellation
    double theta = 0.0;
    if (mu < 0 && 1.45 * (-mu) * mu * mu / 6.0 > 96.0) {
        theta = -mu * mu / (2.0 * Q * Q);
        theta = -std::ceil(16.0 * theta) / 16.0;
    }
    return integrate_on_line(spec, tol, theta);
}

Real contour_integral_shifted(const AiryKernelSpec& spec, const Real& tol, double theta) {
    return integrate_on_line(spec, tol, theta);
}

Real varphi(const Real& mu, const Real& tol) {
    AiryKernelSpec spec;
    spec.denom = {{0, 1}};
    spec.tilt_mu = mu.to_double();
    spec.prefactor = 1.0;
    Real v = contour_integral(spec, tol);
    mpfr_prec_t prec = tol.prec();
    return v * pow(Real(2L, prec), -(Real(1L, prec) / 3L));
}

Real elementary_critical(const Real& mu, const Real& tol) {
    AiryKernelSpec spec;
    spec.denom = {{1, 1}};
    spec.tilt_mu = mu.to_double();
    Real v = contour_integral(spec, tol);
    mpfr_prec_t prec = tol.prec();
    return -(v * pow(Real(2L, prec), -(Real(2L, prec) / 3L)));
}

Real phi_rd(int r, int d, const Real& mu, const Real& tol) {
    if (r < 1 || d < 0 || d > 2 * r - 1)
        throw domain_error("phi_rd: need r >= 1 and 0 <= d <= 2r-1");
    AiryKernelSpec spec;
    spec.numer = {{1 - 3 * r + d, 1}};
    spec.denom = {{1, 2}};
    spec.tilt_mu = mu.to_double();
    Real v = contour_integral(spec, tol);
    mpfr_prec_t prec = tol.prec();
    Real e = Real(-2L, prec) / 3L - static_cast<long>(r) + Real(static_cast<long>(d), prec) / 3L;
    Real sign((1 + 3 * r - d) % 2 == 0 ? 1L : -1L, prec);
    return sign * pow(Real(2L, prec), e) * v;
}

Real airy_table_I(int n, const Real& mu, const Real& tol) {
    if (n < 0 || n > 10) throw domain_error("airy_table_I: n must be in [0, 10]");
    AiryKernelSpec spec;
    spec.numer = {{-n, 1}};
    spec.denom = {{1, 2}};
    spec.tilt_mu = mu.to_double();
    Real v = contour_integral(spec, tol);
    mpfr_prec_t prec = tol.prec();
    Real sign(n % 2 == 0 ? 1L : -1L, prec);
    return sign * root(Real(2L, prec), 3) * v;
}

std::pair<Real, Real> residue_sum(ResidueKind kind, const Real& mu, int terms) {
    if (!(mu > 0L))
        throw domain_error("residue_sum: the residue series is only established for mu > 0");
    mpfr_prec_t prec = mu.prec();
    Real c = pow(Real(2L, prec), -(Real(1L, prec) / 3L)); // 2^{-1/3}
    Real tilt = exp(-(mu * mu * mu) / 6L);
    Real sum(prec), last(prec);
    for (int j = 1; j <= terms; ++j) {
        Real term(prec);
        if (kind == ResidueKind::Acyclic) {
            Real a = ai_root(j, false, prec);
            term = exp(c * mu * a) / ai_prime(a);
        } else {
            Real ap = ai_root(j, true, prec);
            term = exp(c * mu * ap) / (ap * ai(ap));
        }
        sum += term;
        last = abs(term);
    }
    if (kind == ResidueKind::Acyclic) {
        Real pref = pow(Real(2L, prec), -(Real(2L, prec) / 3L)) * tilt;
        return {pref * sum, pref * last};
    }
    Real pref = tilt / 2L;
    return {-(pref * sum), pref * last};
}

} // namespace dgp
