#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgp/convert.hpp"
#include "dgp/rational.hpp"
#include "dgp/real.hpp"

using namespace dgp;

namespace {
constexpr mpfr_prec_t P = 128;

bool close(const Real& a, const Real& b, long ulp_exp) {
    return abs(a - b) <= ldexp(max(abs(a), abs(b)), -ulp_exp);
}
} // namespace

TEST_CASE("real basic identities") {
    CHECK(exp(Real(0L, P)) == Real(1L, P));
    Real s2 = sqrt(Real(2L, P));
    CHECK(close(s2 * s2, Real(2L, P), P - 2));
}

TEST_CASE("exp(-5000) does not underflow") {
    Real v = exp(Real(-5000L, P));
    CHECK(!v.is_zero());
    CHECK(v > 0L);
    // log10(v) = -5000/ln 10
    Real lg = log(v) / log(Real(10L, P));
    Real expect = Real(-5000L, P) / log(Real(10L, P));
    CHECK(close(lg, expect, P - 8));
    CHECK(abs(lg.to_double() - (-2171.472409516259)) < 1e-9);
}

TEST_CASE("huge magnitudes stay representable") {
    Real v = exp(Real(1000000L, P));
    CHECK(v.is_finite());
    Real w = exp(Real(-1000000L, P));
    CHECK(!w.is_zero());
    CHECK(w.is_finite());
}

TEST_CASE("precision mismatch throws, no silent coercion") {
    Real a(1L, 128), b(1L, 192);
    CHECK_THROWS_AS(a + b, precision_mismatch);
    CHECK_THROWS_AS(a * b, precision_mismatch);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(log(Real(-1L, P)), domain_error);
    CHECK_THROWS_AS(sqrt(Real(-2L, P)), domain_error);
    CHECK_THROWS_AS(Real(1L, P) / Real(0L, P), domain_error);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(17, 8) * Rat(8, 17) == Rat(1));
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat("22/33").str() == "2/3");
    CHECK_THROWS_AS(Rat(1) / Rat(0), domain_error);
}

TEST_CASE("e_r formula at r=1 gives 5/24") {
    // (6r)! / (2^{5r} 3^{2r} (2r)! (3r)!) at r = 1
    Rat v = Rat::factorial(6) / (Rat::pow_int(Rat(2), 5) * Rat::pow_int(Rat(3), 2) *
                                 Rat::factorial(2) * Rat::factorial(3));
    CHECK(v == Rat(5, 24));
}

TEST_CASE("rational field laws on random inputs") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> d(-40, 40), dn(1, 40);
    for (int i = 0; i < 200; ++i) {
        Rat a(d(rng), dn(rng)), b(d(rng), dn(rng)), c(d(rng), dn(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
    }
}

TEST_CASE("precision doubling stability for scalar pipeline") {
    // recompute a composite quantity at 2x precision; relative change below
    // 2^-(P-8)
    auto compute = [](mpfr_prec_t prec) {
        Real x = exp(sqrt(Real(2L, prec))) * log(Real(7L, prec)) / pow(Real(3L, prec), 11L);
        return x;
    };
    Real lo = compute(P);
    Real hi = compute(2 * P).to_prec(P);
    CHECK(close(lo, hi, P - 8));
}

TEST_CASE("rational to real conversion") {
    Real half = to_real(Rat(1, 2), P);
    CHECK(half == Real(1L, P) / Real(2L, P));
}
