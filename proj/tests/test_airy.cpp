#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgp/airy.hpp"

using namespace dgp;

namespace {
constexpr mpfr_prec_t P = 128;

Real tol20(mpfr_prec_t prec = P) { return Real("1e-20", prec); }
} // namespace

TEST_CASE("classical Airy constants") {
    Real a1 = ai_root(1, false, P);
    CHECK(std::abs(a1.to_double() - (-2.33810741045977)) < 1e-10);
    CHECK(std::abs(ai_prime(a1).to_double() - 0.70121082272069136) < 1e-10);
    Real a1p = ai_root(1, true, P);
    CHECK(std::abs(a1p.to_double() - (-1.01879297164747)) < 1e-10);
    CHECK(std::abs(ai(a1p).to_double() - 0.53565665602) < 1e-10);
}

TEST_CASE("series and contour agree") {
    // |z| just below and above the series/contour switch, plus forced paths
    for (double x : {0.5, -3.7, 5.2}) {
        Complex z(Real(x, P), Real(0.3, P));
        Complex s = ai_general(0, z);
        Complex c = ai_contour_batch_at({0}, z, ai_contour_pick_level({0}, z))[0];
        CHECK(abs(s - c) < tol20() * max(abs(s), Real(1L, P)));
    }
}

TEST_CASE("Ai(2;z) = z Ai(z)") {
    for (double x : {0.0, 1.0, -1.0}) {
        Complex z(Real(x, P), Real(x < 0 ? 1.0 : 0.0, P));
        Complex lhs = ai_general(2, z);
        Complex rhs = z * ai(z);
        CHECK(abs(lhs - rhs) < tol20());
    }
}

TEST_CASE("recurrence Ai(k+3;z) = (k+1)Ai(k;z) + z Ai(k+1;z)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int it = 0; it < 12; ++it) {
        double xr = d(rng), xi = d(rng);
        if (xr * xr + xi * xi > 25.0) continue;
        Complex z(Real(xr, P), Real(xi, P));
        for (long k = -6; k <= 6; ++k) {
            Complex lhs = ai_general(k + 3, z);
            Complex rhs = ai_general(k, z) * (k + 1L) + z * ai_general(k + 1, z);
            CHECK(abs(lhs - rhs) < tol20() * max(Real(1L, P), abs(lhs)));
        }
    }
}

TEST_CASE("ODE residual on the disk") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int it = 0; it < 12; ++it) {
        double xr = d(rng), xi = d(rng);
        if (xr * xr + xi * xi > 25.0) continue;
        Complex z(Real(xr, P), Real(xi, P));
        Complex res = ai_general(2, z) - z * ai(z);
        CHECK(abs(res) < tol20());
    }
}

TEST_CASE("roots: residual, ordering, alternating slope") {
    Real prev(P);
    int prev_sign = 0;
    for (int j = 1; j <= 4; ++j) {
        Real a = ai_root(j, false, P);
        CHECK(abs(ai(a)) < tol20());
        CHECK(a < 0L);
        if (j > 1) CHECK(a < prev);
        int s = ai_prime(a).sign();
        if (prev_sign != 0) CHECK(s == -prev_sign);
        prev_sign = s;
        prev = a;
    }
    for (int j = 1; j <= 3; ++j) {
        Real ap = ai_root(j, true, P);
        CHECK(abs(ai_prime(ap)) < tol20());
        CHECK(ap < 0L);
    }
}

TEST_CASE("antiderivative: Ai(-1;0) = int_{-inf}^0 Ai - 1 = -1/3") {
    Real v = ai_general(-1, Real(0L, P));
    CHECK(std::abs(v.to_double() - (-1.0 / 3.0)) < 1e-25);
}

TEST_CASE("conjugate symmetry on the imaginary axis") {
    for (long k : {-3L, -1L, 0L, 2L}) {
        Complex up = ai_general(k, Complex(Real(0L, P), Real(2.7, P)));
        Complex dn = ai_general(k, Complex(Real(0L, P), Real(-2.7, P)));
        CHECK(abs(up - dn.conj()) < tol20());
    }
}

TEST_CASE("asymptotic ratio checks") {
    Complex z10(Real(10L, P), Real(0L, P));
    double r0 = abs(ai(z10) / ai_asymptotic(0, z10) - Complex(1L, P)).to_double();
    CHECK(r0 < 0.01);
    double r1 = abs(ai_general(1, z10) / ai_asymptotic(1, z10) - Complex(1L, P)).to_double();
    CHECK(r1 < 0.02);
    CHECK(ai_asymptotic(0, z10).im().is_zero());
}
