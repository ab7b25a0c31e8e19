#pragma once

// Ladder operators for the equation families: raising/lowering relations
// verified exactly against family members, SU(1,1) and quadratic-algebra
// commutator identities at the operator level, the canonical-conjugate
// construction, and parameter-shift relations.

#include "eulerop/diff_op.hpp"
#include "eulerop/euler_poly.hpp"
#include "eulerop/families.hpp"
#include "eulerop/graded_op.hpp"
#include "eulerop/xseries.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace eulerop {

struct LadderCheck {
    long n;
    Rational expected;  // expected coefficient of the target member
    Rational measured;  // uniform ratio image/target, 0 when the image vanishes
    bool ok;
};

// One relation op_n member_n = coeff(n) * target_{n+shift}. Members below
// the bottom of the family (negative target index) count as zero, so the
// check there is that the image vanishes.
struct LadderRelation {
    std::string name;
    long index_shift = 0;
    EulerRational expected_coeff;            // rational function of n
    std::function<GradedOp(long)> op_at;     // operator acting on member n
    std::function<XSeries(long)> member_at;  // family member n
    std::function<XSeries(long)> target_at;  // image family; empty = member_at
    long compare_order = 0;                  // window for truncated members

    LadderCheck verify_at(long n) const;
    std::vector<LadderCheck> verify_range(long lo, long hi) const;
    bool all_ok(long lo, long hi) const;
};

struct CommutatorWitness {
    std::string relation;
    DiffOp measured;
    DiffOp expected;
    bool ok() const { return measured == expected; }
};

struct AlgebraReport {
    bool ok = true;
    std::vector<CommutatorWitness> witnesses;
};

// (x d^2 + gamma d) Phi(-n; gamma; x) = -n Phi(-n+1; gamma; x)
LadderRelation ch_lowering(const Rational& gamma);

// [x - 2xd - gamma + x d^2 + gamma d] Phi(-n) = -(n+gamma) Phi(-n-1)
LadderRelation ch_raising(const Rational& gamma);

// J+ = x, J- = x d^2 + gamma d, J0 = D + gamma/2:
// [J+,J-] = -2 J0 and [J0,J±] = ±J± as exact operator identities.
AlgebraReport su11_check(const Rational& gamma);

// With Jb+ = x + x^2 d instead: [Jb+,J-] = -2(gamma+1/2)D - 3D^2 - gamma,
// plus the grading relations [D,Jb+] = Jb+ and [D,J-] = -J-.
AlgebraReport quadratic_check(const Rational& gamma);

// J~- = (1/(D+alpha))(x d^2 + gamma d); monomial action
// n(gamma+n-1)/(alpha+n-1), polynomial action -n F(alpha,-n+1;gamma;x).
LadderRelation hg_lowering(const Rational& alpha, const Rational& gamma);

// Conjugate raising for a lowering J~- = T~(D) (x d^2 + gamma d) under the
// SU(1,1) triple above: J~+ = J+ T(J0) with
// T(J0) = T~(J0)^(-1) (J0 + delta) / (C - g(J0)), g(J0) = -J0(J0+1),
// C the Casimir value on the lowest monomial and delta fixed by
// [J~-, J~+] 1 = 1. Satisfies [J~-, J~+] x^k = x^k wherever defined.
GradedOp canonical_conjugate(const EulerRational& t_tilde, const Rational& gamma);

// [1 - ((D+alpha-1)/(D+gamma-1)) x] F(alpha,-n;gamma) = F(alpha,-n-1;gamma)
LadderRelation hg_raising(const Rational& alpha, const Rational& gamma);

// The same built from Jb+ = x + x^2 d:
// [1 - ((D+alpha-1)/((D+gamma-1)D))(x + x^2 d)] F = F(next).
LadderRelation hg_raising_bar(const Rational& alpha, const Rational& gamma);

struct HermiteLadder {
    LadderRelation raising;    // (2x - d) H_n = H_{n+1}
    LadderRelation lowering;   // d H_n = 2n H_{n-1}
    bool heisenberg_ok;        // [(1/2) d, 2x - d] = 1
    DiffOp heisenberg_measured;
};

HermiteLadder hermite_ladder();

struct LaguerreLadder {
    LadderRelation raising;   // [xd + (alpha+1) + n - x] L_n = (n+1) L_{n+1}
    LadderRelation lowering;  // [xd - n] L_n = -(n+alpha) L_{n-1}
};

LaguerreLadder laguerre_ladder(const Rational& alpha);

// prod_{k=1}^{n} [xd + alpha + k - x] applied to 1; equals n! L_n^(alpha).
LaurentPoly laguerre_product(long n, const Rational& alpha);

// d L_n^(alpha) = -L_{n-1}^(alpha+1)
LadderRelation parameter_shift_laguerre(const Rational& alpha);

// d F(alpha,beta;gamma) = (alpha beta/gamma) F(alpha+1,beta+1;gamma+1),
// compared through the given window.
LadderRelation parameter_shift_hg(const Rational& alpha, const Rational& beta,
                                  const Rational& gamma, long order);

}  // namespace eulerop
