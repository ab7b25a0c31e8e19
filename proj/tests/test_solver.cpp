#include "doctest.h"

#include "eulerop/errors.hpp"
#include "eulerop/solver.hpp"

#include "test_util.hpp"

using namespace eulerop;

namespace {

EulerPoly D() { return EulerPoly::variable(); }

LaurentPoly poly(std::initializer_list<std::pair<long, Rational>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.set(e, c);
    return p;
}

}  // namespace

TEST_CASE("indicial roots") {
    // (D + 3/2)(D - 1)
    EulerPoly f = EulerPoly::linear(Rational(3, 2)) * EulerPoly::linear(-1);
    IndicialResult r = indicial_roots(f);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].root == Rational(-3, 2));
    CHECK(r.roots[0].multiplicity == 1);
    CHECK(r.roots[1].root == Rational(1));
    CHECK(r.unresolved_degree == 0);
    CHECK(!r.degenerate());

    // 2D(2D - 1)
    EulerPoly two_d = Rational(2) * D();
    IndicialResult h = indicial_roots(two_d * (two_d - EulerPoly(Rational(1))));
    REQUIRE(h.roots.size() == 2);
    CHECK(h.roots[0].root == Rational(0));
    CHECK(h.roots[1].root == Rational(1, 2));

    // D^2 degenerate
    IndicialResult dd = indicial_roots(D() * D());
    REQUIRE(dd.roots.size() == 1);
    CHECK(dd.roots[0].root == Rational(0));
    CHECK(dd.roots[0].multiplicity == 2);
    CHECK(dd.degenerate());

    // irrational pair stays unresolved: D^2 - 2
    IndicialResult u = indicial_roots(D() * D() - EulerPoly(Rational(2)));
    CHECK(u.roots.empty());
    CHECK(u.unresolved_degree == 2);

    CHECK_THROWS_AS(indicial_roots(EulerPoly()), ShapeError);
}

TEST_CASE("indicial deflation divides exactly") {
    testutil::Rng rng(2718);
    for (int i = 0; i < 30; ++i) {
        // build F from random rational roots and an optional irreducible factor
        EulerPoly f(Rational(1));
        long nroots = rng.range(1, 3);
        for (long k = 0; k < nroots; ++k) f = f * EulerPoly::linear(-rng.rational(5, 3));
        if (rng.range(0, 1) == 1) f = f * (D() * D() + EulerPoly(Rational(1)));
        IndicialResult r = indicial_roots(f);

        EulerPoly product(Rational(1));
        long count = 0;
        for (const auto& root : r.roots) {
            for (long m = 0; m < root.multiplicity; ++m)
                product = product * EulerPoly::linear(-root.root);
            count += root.multiplicity;
        }
        CHECK(count + r.unresolved_degree == f.degree());
        auto [q, rem] = f.divided_by(product);
        CHECK(rem.is_zero());
        CHECK(q.degree() == r.unresolved_degree);
        for (const auto& root : r.roots) CHECK(f.eval(root.root).is_zero());
    }
}

TEST_CASE("solve_series terminating confluent example") {
    // modified CH form: F = D(D + gamma - 1), P = -x(D + alpha), alpha=-2, gamma=1
    Rational alpha = -2, gamma = 1;
    EulerPoly f = D() * (D() + EulerPoly(gamma - 1));
    GradedOp p(EulerRational(-EulerPoly::linear(alpha)), 1);
    SolveReport rep = solve_series(f, p, 0, 10);

    CHECK(rep.mode == SolveMode::Ascending);
    CHECK(rep.terminated);
    CHECK(rep.iterations == 2);
    CHECK(rep.solution.terminated());
    CHECK(rep.solution.to_polynomial() ==
          poly({{0, 1}, {1, -2}, {2, Rational(1, 2)}}));
    CHECK(rep.resonances.empty());
}

TEST_CASE("solve_series terminating hypergeometric example") {
    // modified HG form: F = D(D + gamma - 1), P = -x(D + alpha)(D + beta)
    Rational alpha = -2, beta = 1, gamma = 1;
    EulerPoly f = D() * (D() + EulerPoly(gamma - 1));
    GradedOp p(EulerRational(-(EulerPoly::linear(alpha) * EulerPoly::linear(beta))), 1);
    SolveReport rep = solve_series(f, p, 0, 10);
    CHECK(rep.terminated);
    CHECK(rep.solution.to_polynomial() == poly({{0, 1}, {1, -2}, {2, 1}}));
}

TEST_CASE("solve_series degenerate F has no resonance on later exponents") {
    // F = D^2, P = x (the x-multiplied form of x y'' + y' + y)
    EulerPoly f = D() * D();
    GradedOp p(EulerRational(Rational(1)), 1);
    SolveReport rep = solve_series(f, p, 0, 6);
    CHECK(!rep.terminated);
    // y = sum (-1)^m x^m / (m!)^2
    Rational expect = 1;
    CHECK(rep.solution.coeff(0) == expect);
    for (long m = 1; m <= 6; ++m) {
        expect = -expect / Rational(m * m);
        CHECK(rep.solution.coeff(m) == expect);
    }
}

TEST_CASE("solve_series rejects bad inputs") {
    EulerPoly f = D() * D();
    GradedOp mixed;
    mixed.add_term(EulerRational(Rational(1)), 1);
    mixed.add_term(EulerRational(Rational(1)), -1);
    CHECK_THROWS_AS(solve_series(f, mixed, 0, 5), MixedDegreeError);

    GradedOp zero_shift(EulerRational(Rational(1)), 0);
    GradedOp with_neg = zero_shift;
    with_neg.add_term(EulerRational(Rational(1)), -1);
    CHECK_THROWS_AS(solve_series(f, with_neg, 0, 5), MixedDegreeError);

    GradedOp p(EulerRational(Rational(1)), 1);
    CHECK_THROWS_AS(solve_series(f, p, 1, 5), ShapeError);  // F(1) != 0
    CHECK_THROWS_AS(solve_series(EulerPoly(), p, 0, 5), ShapeError);
}

TEST_CASE("solve_series resonance is a hard error") {
    // F = D(D - 2), P = x: iteration reaches exponent 2 where F vanishes
    EulerPoly f = D() * (D() - EulerPoly(Rational(2)));
    GradedOp p(EulerRational(Rational(1)), 1);
    try {
        solve_series(f, p, 0, 8);
        FAIL("expected resonance");
    } catch (const ResonanceError& e) {
        CHECK(e.exponent() == Rational(2));
    }
}

TEST_CASE("exp_apply confluent lowering") {
    // A = x d^2 + gamma d with gamma = 1 at lambda = 2
    GradedOp a = to_graded(DiffOp::monomial(1, 1, 2) + DiffOp::monomial(1, 0, 1));
    XSeries y = exp_apply(a, 2, 10, -1);
    CHECK(y.terminated());
    CHECK(y.to_polynomial() == poly({{2, 1}, {1, -4}, {0, 2}}));

    // arbitrary lowering annihilates x^0
    XSeries c = exp_apply(a, 0, 10, -1);
    CHECK(c.to_polynomial() == poly({{0, 1}}));

    // Hermite: A = (1/4) d^2, lambda = 2 -> x^2 - 1/2
    GradedOp h = to_graded(DiffOp::monomial(Rational(1, 4), 0, 2));
    XSeries y2 = exp_apply(h, 2, 10, -1);
    CHECK(y2.to_polynomial() == poly({{2, 1}, {0, Rational(-1, 2)}}));

    CHECK_THROWS_AS(exp_apply(to_graded(DiffOp::x()), 2, 5, -1), ShapeError);
    CHECK_THROWS_AS(exp_apply(h, 2, 5, 2), std::domain_error);
}

TEST_CASE("exp_apply on polynomials matches monomial route") {
    GradedOp h = to_graded(DiffOp::monomial(Rational(1, 4), 0, 2));
    LaurentPoly p = poly({{3, 2}, {1, -1}});
    LaurentPoly out = exp_apply(h, p, -1);
    LaurentPoly expect = Rational(2) * exp_apply(h, Rational(3), 10, -1).to_polynomial() -
                         exp_apply(h, Rational(1), 10, -1).to_polynomial();
    CHECK(out == expect);
}

TEST_CASE("m-factorial identity for the descending hypergeometric setup") {
    // [-(1/((D+alpha)(D+beta))) P]^m x^(-beta) = (1/m!) [(1/(D+alpha)) P]^m x^(-beta)
    // with P = x d^2 + gamma d and beta = -n.
    testutil::Rng rng(1123);
    for (int trial = 0; trial < 5; ++trial) {
        Rational alpha = rng.nonzero_rational(7, 3) + Rational(8);  // keep clear of poles
        Rational gamma = rng.nonzero_rational(7, 3) + Rational(8);
        long n = rng.range(1, 6);
        Rational beta = Rational(-n);

        GradedOp p = to_graded(DiffOp::monomial(1, 1, 2) + DiffOp::monomial(gamma, 0, 1));
        EulerRational inv_full(EulerPoly(Rational(1)),
                               EulerPoly::linear(alpha) * EulerPoly::linear(beta));
        EulerRational inv_alpha(EulerPoly(Rational(1)), EulerPoly::linear(alpha));
        GradedOp lhs_step = -left_compose(inv_full, p);
        GradedOp rhs_step = left_compose(inv_alpha, p);

        XSeries lhs = XSeries::monomial(Rational(n), Direction::Descending, std::nullopt);
        XSeries rhs = lhs;
        Rational inv_fact = 1;
        for (long m = 1; m <= n; ++m) {
            lhs = apply_graded(lhs_step, lhs, 40);
            rhs = apply_graded(rhs_step, rhs, 40);
            inv_fact /= Rational(m);
            CHECK(lhs == rhs.scaled(inv_fact));
        }
    }
}

TEST_CASE("residuals vanish for produced solutions") {
    // Gauss equation via modified form, then residual with the original operator.
    Rational alpha = Rational(1, 2), beta = Rational(1, 2), gamma = Rational(3, 2);
    EulerPoly f = D() * (D() + EulerPoly(gamma - 1));
    GradedOp p(EulerRational(-(EulerPoly::linear(alpha) * EulerPoly::linear(beta))), 1);
    SolveReport rep = solve_series(f, p, 0, 8);
    CHECK(!rep.terminated);
    CHECK(rep.solution.coeff(1) == Rational(1, 6));
    CHECK(rep.solution.coeff(2) == Rational(3, 40));
    CHECK(rep.solution.coeff(3) == Rational(5, 112));

    XSeries res = check_residual(f, p, rep.solution, 8);
    CHECK(res.is_zero());

    // (1-x) x y'' + (gamma - (alpha+beta+1) x) y' - alpha beta y as DiffOp,
    // multiplied by x to principalize:
    DiffOp gauss = DiffOp::monomial(1, 2, 2) + DiffOp::monomial(alpha + beta + 1, 1, 1) +
                   DiffOp::monomial(alpha * beta, 0, 0) + DiffOp::monomial(-1, 1, 2) +
                   DiffOp::monomial(-gamma, 0, 1);
    XSeries res2 = check_residual(gauss, rep.solution, 8);
    CHECK(res2.is_zero());

    // CH polynomial case: exact zero residual everywhere
    // x y'' + (1 - x) y' + 2 y with solution 1 - 2x + x^2/2
    DiffOp ch = DiffOp::monomial(1, 1, 2) + DiffOp::monomial(1, 0, 1) +
                DiffOp::monomial(-1, 1, 1) + DiffOp::monomial(2, 0, 0);
    LaurentPoly phi = poly({{0, 1}, {1, -2}, {2, Rational(1, 2)}});
    XSeries res3 = check_residual(ch, XSeries::from_polynomial(phi), 10);
    CHECK(res3.is_zero());

    // zero series stays zero
    XSeries zero(0, Direction::Ascending, 5);
    CHECK(check_residual(gauss, zero, 5).is_zero());
}

TEST_CASE("terminated reports have exactly zero residual everywhere") {
    Rational alpha = -3, gamma = 2;
    EulerPoly f = D() * (D() + EulerPoly(gamma - 1));
    GradedOp p(EulerRational(-EulerPoly::linear(alpha)), 1);
    SolveReport rep = solve_series(f, p, 0, 20);
    REQUIRE(rep.terminated);
    CHECK(rep.solution.to_polynomial() ==
          poly({{0, 1}, {1, Rational(-3, 2)}, {2, Rational(1, 2)}, {3, Rational(-1, 24)}}));
    CHECK(check_residual(f, p, rep.solution, 40).is_zero());
}

TEST_CASE("truncated reports are residual-free through the window") {
    testutil::Rng rng(9001);
    for (int i = 0; i < 10; ++i) {
        Rational alpha = rng.rational(6, 3) + Rational(7);  // positive, no termination
        Rational gamma = rng.rational(6, 3) + Rational(9);
        EulerPoly f = D() * (D() + EulerPoly(gamma - 1));
        GradedOp p(EulerRational(-EulerPoly::linear(alpha)), 1);
        SolveReport rep = solve_series(f, p, 0, 12);
        CHECK(!rep.terminated);
        XSeries res = check_residual(f, p, rep.solution, 12);
        CHECK(res.is_zero());

        // the first coefficient beyond the window is genuinely nonzero
        SolveReport wider = solve_series(f, p, 0, 13);
        CHECK(!wider.solution.coeff(13).is_zero());
    }
}
