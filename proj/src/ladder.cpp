#include "eulerop/ladder.hpp"

#include "eulerop/errors.hpp"
#include "eulerop/solver.hpp"

namespace eulerop {

namespace {

DiffOp ch_lowering_op(const Rational& gamma) {
    DiffOp op;
    op.add_term(1, 1, 2);
    op.add_term(gamma, 0, 1);
    return op;
}

XSeries ch_member(const Rational& gamma, long n) { return confluent_1f1(Rational(-n), gamma, n); }

XSeries hg_member(const Rational& alpha, const Rational& gamma, long n) {
    return hypergeometric_2f1(alpha, Rational(-n), gamma, n);
}

EulerRational hg_raising_factor(const Rational& alpha, const Rational& gamma) {
    return EulerRational(EulerPoly::linear(alpha - Rational(1)),
                         EulerPoly::linear(gamma - Rational(1)));
}

}  // namespace

LadderCheck LadderRelation::verify_at(long n) const {
    XSeries image = apply_graded(op_at(n), member_at(n), compare_order);
    long target_index = n + index_shift;
    Rational expected =
        target_index < 0 ? Rational(0) : expected_coeff.eval(Rational(n));
    if (expected.is_zero()) return {n, expected, Rational(0), image.is_zero()};
    XSeries target = (target_at ? target_at : member_at)(target_index);
    auto measured = scale_between(image, target);
    if (!measured) return {n, expected, Rational(0), false};
    return {n, expected, *measured, *measured == expected};
}

std::vector<LadderCheck> LadderRelation::verify_range(long lo, long hi) const {
    std::vector<LadderCheck> out;
    for (long n = lo; n <= hi; ++n) out.push_back(verify_at(n));
    return out;
}

bool LadderRelation::all_ok(long lo, long hi) const {
    for (const auto& check : verify_range(lo, hi))
        if (!check.ok) return false;
    return true;
}

LadderRelation ch_lowering(const Rational& gamma) {
    LadderRelation rel;
    rel.name = "ch_lowering";
    rel.index_shift = -1;
    rel.expected_coeff = EulerRational(-EulerPoly::variable());
    GradedOp op = to_graded(ch_lowering_op(gamma));
    rel.op_at = [op](long) { return op; };
    rel.member_at = [gamma](long n) { return ch_member(gamma, n); };
    return rel;
}

LadderRelation ch_raising(const Rational& gamma) {
    LadderRelation rel;
    rel.name = "ch_raising";
    rel.index_shift = 1;
    rel.expected_coeff = EulerRational(-EulerPoly::linear(gamma));
    DiffOp d = ch_lowering_op(gamma);
    d.add_term(1, 1, 0);
    d.add_term(-2, 1, 1);
    d.add_term(-gamma, 0, 0);
    GradedOp op = to_graded(d);
    rel.op_at = [op](long) { return op; };
    rel.member_at = [gamma](long n) { return ch_member(gamma, n); };
    return rel;
}

AlgebraReport su11_check(const Rational& gamma) {
    DiffOp jp = DiffOp::x();
    DiffOp jm = ch_lowering_op(gamma);
    DiffOp j0 = DiffOp::euler() + (gamma / Rational(2)) * DiffOp::identity();

    AlgebraReport rep;
    rep.witnesses.push_back({"[J+,J-] = -2*J0", commutator(jp, jm), Rational(-2) * j0});
    rep.witnesses.push_back({"[J0,J+] = J+", commutator(j0, jp), jp});
    rep.witnesses.push_back({"[J0,J-] = -J-", commutator(j0, jm), -jm});
    for (const auto& w : rep.witnesses) rep.ok = rep.ok && w.ok();
    return rep;
}

AlgebraReport quadratic_check(const Rational& gamma) {
    DiffOp jbp = DiffOp::x() + DiffOp::monomial(1, 2, 1);
    DiffOp jm = ch_lowering_op(gamma);
    DiffOp d2 = DiffOp::euler() * DiffOp::euler();
    DiffOp expected = -(Rational(2) * gamma + Rational(1)) * DiffOp::euler() -
                      Rational(3) * d2 - gamma * DiffOp::identity();

    AlgebraReport rep;
    rep.witnesses.push_back({"[Jb+,J-] = -2(gamma+1/2)D - 3D^2 - gamma",
                             commutator(jbp, jm), expected});
    rep.witnesses.push_back({"[D,Jb+] = Jb+", commutator(DiffOp::euler(), jbp), jbp});
    rep.witnesses.push_back({"[D,J-] = -J-", commutator(DiffOp::euler(), jm), -jm});
    for (const auto& w : rep.witnesses) rep.ok = rep.ok && w.ok();
    return rep;
}

LadderRelation hg_lowering(const Rational& alpha, const Rational& gamma) {
    LadderRelation rel;
    rel.name = "hg_lowering";
    rel.index_shift = -1;
    rel.expected_coeff = EulerRational(-EulerPoly::variable());
    EulerRational inv(EulerPoly(Rational(1)), EulerPoly::linear(alpha));
    GradedOp op = left_compose(inv, to_graded(ch_lowering_op(gamma)));
    rel.op_at = [op](long) { return op; };
    rel.member_at = [alpha, gamma](long n) { return hg_member(alpha, gamma, n); };
    return rel;
}

GradedOp canonical_conjugate(const EulerRational& t_tilde, const Rational& gamma) {
    Rational half = gamma / Rational(2);
    // Casimir value on the lowest monomial: (J-J+ + g(J0)) 1, g(j) = -j(j+1).
    Rational casimir = gamma - half * (half + Rational(1));
    // C - g(J0) on the lowest monomial; the pair normalization divides by it.
    Rational pair0 = casimir + half * (half + Rational(1));
    if (pair0.is_zero() || gamma.is_zero())
        throw InconsistentConjugateError("canonical_conjugate: weight gamma must be nonzero");
    if (!t_tilde.defined_at(0) || t_tilde.eval(0).is_zero())
        throw InconsistentConjugateError(
            "canonical_conjugate: lowering factor degenerate at the lowest monomial");

    // [J~-, J~+] 1 = gamma T~(0) T(gamma/2) with
    // T(j) = T~(j)^(-1) (j+delta)/(C + j(j+1)); solving for delta:
    Rational delta = pair0 / gamma - half;

    EulerPoly num = EulerPoly::linear(half + delta);  // J0 + delta in D
    EulerPoly den = EulerPoly(casimir) +
                    EulerPoly::linear(half) * EulerPoly::linear(half + Rational(1));
    EulerRational t = t_tilde.reciprocal() * EulerRational(num, den);
    return GradedOp(t, 1);
}

LadderRelation hg_raising(const Rational& alpha, const Rational& gamma) {
    LadderRelation rel;
    rel.name = "hg_raising";
    rel.index_shift = 1;
    rel.expected_coeff = EulerRational(Rational(1));
    GradedOp op = GradedOp::identity();
    op += left_compose(-hg_raising_factor(alpha, gamma), to_graded(DiffOp::x()));
    rel.op_at = [op](long) { return op; };
    rel.member_at = [alpha, gamma](long n) { return hg_member(alpha, gamma, n); };
    return rel;
}

LadderRelation hg_raising_bar(const Rational& alpha, const Rational& gamma) {
    LadderRelation rel;
    rel.name = "hg_raising_bar";
    rel.index_shift = 1;
    rel.expected_coeff = EulerRational(Rational(1));
    EulerRational factor(EulerPoly::linear(alpha - Rational(1)),
                         EulerPoly::linear(gamma - Rational(1)) * EulerPoly::variable());
    GradedOp op = GradedOp::identity();
    op += left_compose(-factor, to_graded(DiffOp::x() + DiffOp::monomial(1, 2, 1)));
    rel.op_at = [op](long) { return op; };
    rel.member_at = [alpha, gamma](long n) { return hg_member(alpha, gamma, n); };
    return rel;
}

HermiteLadder hermite_ladder() {
    LadderRelation raising;
    raising.name = "hermite_raising";
    raising.index_shift = 1;
    raising.expected_coeff = EulerRational(Rational(1));
    GradedOp up = to_graded(Rational(2) * DiffOp::x() - DiffOp::ddx());
    raising.op_at = [up](long) { return up; };
    raising.member_at = [](long n) { return XSeries::from_polynomial(hermite(n)); };

    LadderRelation lowering;
    lowering.name = "hermite_lowering";
    lowering.index_shift = -1;
    lowering.expected_coeff = EulerRational(Rational(2) * EulerPoly::variable());
    GradedOp down = to_graded(DiffOp::ddx());
    lowering.op_at = [down](long) { return down; };
    lowering.member_at = raising.member_at;

    DiffOp a = Rational(1, 2) * DiffOp::ddx();
    DiffOp adag = Rational(2) * DiffOp::x() - DiffOp::ddx();
    DiffOp measured = commutator(a, adag);
    return {std::move(raising), std::move(lowering), measured == DiffOp::identity(),
            std::move(measured)};
}

LaguerreLadder laguerre_ladder(const Rational& alpha) {
    auto member = [alpha](long n) { return XSeries::from_polynomial(laguerre(n, alpha)); };

    LadderRelation raising;
    raising.name = "laguerre_raising";
    raising.index_shift = 1;
    raising.expected_coeff = EulerRational(EulerPoly::linear(1));  // n + 1
    raising.op_at = [alpha](long n) {
        DiffOp op = DiffOp::euler();
        op.add_term(alpha + Rational(1) + Rational(n), 0, 0);
        op.add_term(-1, 1, 0);
        return to_graded(op);
    };
    raising.member_at = member;

    LadderRelation lowering;
    lowering.name = "laguerre_lowering";
    lowering.index_shift = -1;
    lowering.expected_coeff = EulerRational(-EulerPoly::linear(alpha));  // -(n + alpha)
    lowering.op_at = [](long n) {
        DiffOp op = DiffOp::euler();
        op.add_term(Rational(-n), 0, 0);
        return to_graded(op);
    };
    lowering.member_at = member;

    return {std::move(raising), std::move(lowering)};
}

LaurentPoly laguerre_product(long n, const Rational& alpha) {
    if (n < 0) throw std::domain_error("laguerre_product: n must be nonnegative");
    DiffOp product = DiffOp::identity();
    for (long k = 1; k <= n; ++k) {
        DiffOp factor = DiffOp::euler();
        factor.add_term(alpha + Rational(k), 0, 0);
        factor.add_term(-1, 1, 0);
        product = product * factor;
    }
    XSeries one = XSeries::monomial(0, Direction::Ascending, std::nullopt);
    return apply_diffop(product, one, 0).to_polynomial();
}

LadderRelation parameter_shift_laguerre(const Rational& alpha) {
    LadderRelation rel;
    rel.name = "parameter_shift_laguerre";
    rel.index_shift = -1;
    rel.expected_coeff = EulerRational(Rational(-1));
    GradedOp d = to_graded(DiffOp::ddx());
    rel.op_at = [d](long) { return d; };
    rel.member_at = [alpha](long n) { return XSeries::from_polynomial(laguerre(n, alpha)); };
    rel.target_at = [alpha](long n) {
        return XSeries::from_polynomial(laguerre(n, alpha + Rational(1)));
    };
    return rel;
}

LadderRelation parameter_shift_hg(const Rational& alpha, const Rational& beta,
                                  const Rational& gamma, long order) {
    LadderRelation rel;
    rel.name = "parameter_shift_hg";
    rel.index_shift = 0;
    rel.expected_coeff = EulerRational(alpha * beta / gamma);
    rel.compare_order = order;
    GradedOp d = to_graded(DiffOp::ddx());
    rel.op_at = [d](long) { return d; };
    rel.member_at = [alpha, beta, gamma, order](long) {
        return hypergeometric_2f1(alpha, beta, gamma, order);
    };
    rel.target_at = [alpha, beta, gamma, order](long) {
        return hypergeometric_2f1(alpha + Rational(1), beta + Rational(1), gamma + Rational(1),
                                  order - 1);
    };
    return rel;
}

}  // namespace eulerop
