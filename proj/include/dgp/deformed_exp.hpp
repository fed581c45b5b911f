#pragma once

#include <vector>

#include "dgp/complex.hpp"
#include "dgp/rational.hpp"
#include "dgp/series.hpp"

namespace dgp {

// Entire functions of the shape P(x) e^{C_k(x)} with a rational-coefficient
// polynomial P and C_k(x) = x + x^2/2 + ... + x^k/k. This family covers
// every F(.) the digraph generating functions need and is closed under
// x F(x) and x F'(x), which the analytic derivative identity uses.
class EntireFn {
  public:
    static EntireFn one() { return EntireFn({Rat(1)}, 0); }
    static EntireFn monomial(int m);
    static EntireFn exp_ck(int k) { return EntireFn({Rat(1)}, k); }
    static EntireFn poly_exp(std::vector<Rat> poly, int k) { return EntireFn(std::move(poly), k); }

    const std::vector<Rat>& poly() const { return poly_; }
    int ck_order() const { return k_; }

    // Maclaurin coefficients of F, as ordinary coefficients
    Series<Rat> maclaurin(int order) const;

    Real value1(mpfr_prec_t prec) const;  // F(1)
    Real dvalue1(mpfr_prec_t prec) const; // F'(1)
    Complex eval(const Complex& x) const;

    EntireFn times_x() const;  // x F(x)
    EntireFn x_dfdx() const;   // x F'(x)

    // real Maclaurin coefficients (conjugate symmetry) always hold here;
    // root theorems additionally need F nonzero off the origin, i.e. a
    // monomial polynomial part
    bool rootfinding_safe() const;

  private:
    EntireFn(std::vector<Rat> poly, int k) : poly_(std::move(poly)), k_(k) {}
    std::vector<Rat> poly_;
    int k_;
};

enum class GgfKind { Multigraphic, SimpleGraphic };

// phi_r(z, w; F) for the multigraphic kind and tilde-phi_r for the simple
// kind, evaluated as the Hadamard series
//   sum_n [z^n]((1-wz)^r e^{-z} F(wz)) * weight(n) * z^n
// with weight e^{-n^2 w/2} or (1+w)^{-binom(n,2)}. w > 0 required; the
// weights decay superexponentially so the series converges for every z.
// Work at the precision carried by z; near the first root about
// 1.5/w + target bits are needed (find_root sizes this automatically).
Complex phi_eval(const Complex& z, const Real& w, int r, const EntireFn& F, GgfKind kind);
Real phi_eval(const Real& z, const Real& w, int r, const EntireFn& F, GgfKind kind);

// Three-term asymptotic root location:
//   r = 0: (ew)^{-1}(1 - a_j 2^{-1/3} w^{2/3} - w (1/6 - F'(1)/F(1)))
//   r = 1: (ew)^{-1}(1 - a_j' 2^{-1/3} w^{2/3} + w (1/6 + F'(1)/F(1)))
Real root_asymptotic(int j, const Real& w, int r01, const EntireFn& F, mpfr_prec_t prec);

// j-th real root of phi_r (r in {0,1}) by increasing modulus, located to
// target_digits decimal digits. Newton seeded by root_asymptotic inside a
// neighbor-separating bracket for small w, bracket scanning otherwise.
Real find_root(int j, const Real& w, int r01, const EntireFn& F, GgfKind kind,
               int target_digits = 12);

struct DPhiAtRoot {
    Real numeric; // term-wise differentiated Hadamard series at the root
    Real asym;    // the closed-form asymptotic estimate
};

// k-th z-derivative of phi_{r01} at its j-th root, both routes.
DPhiAtRoot dphi_at_root(int j, const Real& w, int r01, const EntireFn& F, int k,
                        GgfKind kind = GgfKind::Multigraphic, int target_digits = 12);

enum class ApproxPart { A, B, C, CRefined };

// Uniform approximations of phi_r in the three regimes (and the refined
// part (c) for r in {0,1}). Throws domain_error naming the violated
// regime inequality.
Complex uniform_approx(ApproxPart part, const Complex& z, const Real& w, int r,
                       const EntireFn& F, GgfKind kind);

} // namespace dgp
