#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgp/airy_integrals.hpp"

using namespace dgp;

namespace {
constexpr mpfr_prec_t P = 128;
Real tol(const char* s = "1e-12") { return Real(s, P); }
} // namespace

TEST_CASE("unit integrals from the one-eighth theorem and Knessl") {
    // (1/2 pi i) Int Ai(-2; tau)/Ai'(tau)^2 d tau = 1
    AiryKernelSpec s1;
    s1.numer = {{-2, 1}};
    s1.denom = {{1, 2}};
    // in the -2^{1/3} s variable the substitution contributes 2^{1/3}
    Real v1 = contour_integral(s1, tol());
    Real c = root(Real(2L, P), 3);
    CHECK(std::abs((v1 * c).to_double() - 1.0) < 1e-8);

    // (1/2 pi i) Int Ai^{-2}(x) dx = 1
    AiryKernelSpec s2;
    s2.denom = {{0, 2}};
    Real v2 = contour_integral(s2, tol());
    CHECK(std::abs((v2 * c).to_double() - 1.0) < 1e-8);
}

TEST_CASE("varphi values") {
    CHECK(std::abs(varphi(Real(0L, P), tol()).to_double() - 0.488736706) < 1e-8);
    CHECK(std::abs(varphi(Real(-3L, P), tol()).to_double() - 3.04943) < 1e-5);
    CHECK(std::abs(varphi(Real(3L, P), tol()).to_double() - 0.00004) < 1e-5);
}

TEST_CASE("elementary critical values") {
    CHECK(std::abs(elementary_critical(Real(0L, P), tol()).to_double() - 0.699687) < 1e-5);
    CHECK(std::abs(elementary_critical(Real(-3L, P), tol()).to_double() - 0.98521) < 1e-5);
    CHECK(std::abs(elementary_critical(Real(3L, P), tol()).to_double() - 0.00089) < 1e-5);
}

TEST_CASE("phi_rd: bicyclic probability factor") {
    // full bicyclic critical probability phi_{1,0}(mu)/2! = I(2,mu)/8
    Real p0 = phi_rd(1, 0, Real(0L, P), tol()) / 2L;
    CHECK(std::abs(p0.to_double() - 0.125) < 1e-6);
    Real p1 = phi_rd(1, 0, Real(1L, P), tol()) / 2L;
    CHECK(std::abs(p1.to_double() - 0.11896) < 1e-5);
    Real pm4 = phi_rd(1, 0, Real(-4L, P), tol()) / 2L;
    CHECK(std::abs(pm4.to_double() - 0.01333) < 1e-5);
}

TEST_CASE("I table spot values") {
    CHECK(std::abs(airy_table_I(2, Real(0L, P), tol()).to_double() - 1.0) < 1e-9);
    CHECK(std::abs(airy_table_I(0, Real(0L, P), tol()).to_double() - 1.7117517513) < 1e-9);
    CHECK(std::abs(airy_table_I(10, Real(4L, P), tol()).to_double() - 1.1440939e-7) < 1e-13);
}

TEST_CASE("residue sums agree with the contour integrals for mu > 0") {
    for (long m : {1L, 2L, 3L}) {
        Real mu(m, P);
        auto [acy, est_a] = residue_sum(ResidueKind::Acyclic, mu, 30);
        CHECK(std::abs((acy - varphi(mu, tol())).to_double()) < 1e-6);
        auto [ele, est_e] = residue_sum(ResidueKind::Elementary, mu, 30);
        CHECK(std::abs((ele - elementary_critical(mu, tol())).to_double()) < 1e-6);
    }
    CHECK_THROWS_AS(residue_sum(ResidueKind::Acyclic, Real(-1L, P), 5), domain_error);
    CHECK_THROWS_AS(residue_sum(ResidueKind::Acyclic, Real(0L, P), 5), domain_error);
}

TEST_CASE("elementary residue series: first term dominates at mu = 2") {
    auto [full, est] = residue_sum(ResidueKind::Elementary, Real(2L, P), 1);
    auto [more, est2] = residue_sum(ResidueKind::Elementary, Real(2L, P), 24);
    // |term_1| > |sum of the rest|
    CHECK(abs(full) > abs(more - full));
}

TEST_CASE("phi(mu)/|mu| -> 1 as mu -> -inf") {
    Real r10 = varphi(Real(-10L, P), tol()) / 10L;
    Real r20 = varphi(Real(-20L, P), tol("1e-10")) / 20L;
    double d10 = std::abs(r10.to_double() - 1.0);
    double d20 = std::abs(r20.to_double() - 1.0);
    CHECK(d20 < d10);
    CHECK(d10 < 0.01);
}

TEST_CASE("non-decaying spec is rejected") {
    AiryKernelSpec bad;
    bad.numer = {{0, 2}};
    bad.denom = {{1, 2}};
    CHECK_THROWS_AS(contour_integral(bad, tol()), domain_error);
}
