#include "dgp/quadrature.hpp"

#include <map>
#include <mutex>

#include "dgp/errors.hpp"

namespace dgp {

namespace {
std::mutex cache_mutex;
std::map<std::pair<mpfr_prec_t, int>, std::vector<QuadNode>> cache;
} // namespace

const std::vector<QuadNode>& tanh_sinh_nodes(mpfr_prec_t prec, int level) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(prec, level);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // truncation: weight ~ exp(-(pi/2) sinh u) below 2^{-(prec+16)}
    Real lim(static_cast<long>(prec) + 16, prec);
    Real l2(prec);
    mpfr_const_log2(l2.raw(), MPFR_RNDN);
    Real target = lim * l2; // ln(2^{prec+16})
    Real half_pi = pi(prec) / 2L;
    Real arg = target / half_pi * 2L + 2L;
    Real U(prec);
    mpfr_asinh(U.raw(), arg.raw(), MPFR_RNDN); // sinh U ~ arg

    std::vector<QuadNode> nodes;
    Real h = ldexp(Real(1L, prec), -level);
    long jmax = (U / h).to_long() + 1;
    for (long j = -jmax; j <= jmax; ++j) {
        Real u = h * j;
        Real sh(prec), ch(prec);
        mpfr_sinh_cosh(sh.raw(), ch.raw(), u.raw(), MPFR_RNDN);
        Real t = half_pi * sh;
        Real x = tanh(t);
        Real cht = cosh(t);
        Real w = half_pi * ch / (cht * cht) * h;
        if (w < ldexp(Real(1L, prec), -(static_cast<long>(prec) + 24))) continue;
        nodes.push_back({x, w});
    }
    auto [pos, ok] = cache.emplace(key, std::move(nodes));
    (void)ok;
    return pos->second;
}

Complex integrate_ts(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& tol, const Real& scale_floor, int min_level, int max_level) {
    mpfr_prec_t prec = a.prec();
    Real mid = (a + b) / 2L;
    Real halflen = (b - a) / 2L;
    Complex prev(prec);
    bool have_prev = false;
    for (int level = min_level; level <= max_level; ++level) {
        const auto& nodes = tanh_sinh_nodes(prec, level);
        Complex acc(prec);
        for (const auto& nd : nodes) {
            Real x = mid + halflen * nd.x;
            acc = acc + f(x) * nd.w;
        }
        acc = acc * halflen;
        if (have_prev) {
            Real err = abs(acc - prev);
            Real scale = max(abs(acc), scale_floor);
            if (err <= tol * scale) return acc;
        }
        prev = acc;
        have_prev = true;
    }
    throw convergence_error("integrate_ts: tanh-sinh refinement did not converge",
                            abs(prev).to_double());
}

} // namespace dgp
