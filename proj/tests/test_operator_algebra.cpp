#include "doctest.h"

#include "eulerop/diff_op.hpp"
#include "eulerop/errors.hpp"
#include "eulerop/graded_op.hpp"

#include "test_util.hpp"

using namespace eulerop;

namespace {

XSeries mono(const Rational& e) {
    return XSeries::monomial(e, Direction::Ascending, std::nullopt);
}

}  // namespace

TEST_CASE("apply_diffop basics") {
    // x*d^2 on x^3
    DiffOp op = DiffOp::monomial(1, 1, 2);
    XSeries r = apply_diffop(op, mono(3), 10);
    CHECK(r.to_polynomial() == LaurentPoly::monomial(6, 2));

    // Euler eigenvalue on x^(5/2)
    XSeries e = apply_diffop(DiffOp::euler(), mono(Rational(5, 2)), 10);
    CHECK(e.base() == Rational(5, 2));
    CHECK(e.coeff(0) == Rational(5, 2));
    CHECK(e.terminated());

    // (x d^2 + gamma d) with gamma = 1 on x^2
    DiffOp ch = DiffOp::monomial(1, 1, 2) + DiffOp::monomial(1, 0, 1);
    XSeries c = apply_diffop(ch, mono(2), 10);
    CHECK(c.to_polynomial() == LaurentPoly::monomial(4, 1));
}

TEST_CASE("composition and commutators") {
    DiffOp D = DiffOp::euler();
    DiffOp x = DiffOp::x();
    DiffOp d = DiffOp::ddx();

    CHECK(commutator(D, x) == x);
    CHECK(commutator(d, x) == DiffOp::identity());
    CHECK(d * x == x * d + DiffOp::identity());

    // [x, x d^2 + gamma d] with gamma = 2 equals -(2 x d + 2) = -(2D + gamma)
    DiffOp j_minus = DiffOp::monomial(1, 1, 2) + DiffOp::monomial(2, 0, 1);
    DiffOp expect = DiffOp::monomial(-2, 1, 1) + DiffOp::monomial(-2, 0, 0);
    CHECK(commutator(x, j_minus) == expect);

    testutil::Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        DiffOp a = rng.diff_op(3, 3, 3);
        CHECK(commutator(a, a) == DiffOp());
    }
}

TEST_CASE("composition is associative and degree-additive") {
    testutil::Rng rng(321);
    for (int i = 0; i < 25; ++i) {
        DiffOp a = rng.diff_op(2, 3, 2);
        DiffOp b = rng.diff_op(2, 3, 2);
        DiffOp c = rng.diff_op(2, 3, 2);
        CHECK((a * b) * c == a * (b * c));

        // degree law on homogeneous inputs
        DiffOp ha = DiffOp::monomial(rng.rational(), rng.range(0, 3), rng.range(0, 3));
        DiffOp hb = DiffOp::monomial(rng.rational(), rng.range(0, 3), rng.range(0, 3));
        DiffOp prod = ha * hb;
        if (!prod.is_zero() && !ha.is_zero() && !hb.is_zero()) {
            for (long deg : prod.degrees())
                CHECK(deg == ha.degrees()[0] + hb.degrees()[0]);
        }
    }
}

TEST_CASE("jacobi identity") {
    testutil::Rng rng(777);
    for (int i = 0; i < 15; ++i) {
        DiffOp a = rng.diff_op(2, 2, 2);
        DiffOp b = rng.diff_op(2, 2, 2);
        DiffOp c = rng.diff_op(2, 2, 2);
        DiffOp j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                   commutator(c, commutator(a, b));
        CHECK(j == DiffOp());
    }
}

TEST_CASE("to_graded forms") {
    GradedOp g = to_graded(DiffOp::monomial(1, 2, 2));
    auto terms = g.terms();
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].shift == 0);
    // mu(mu-1)
    CHECK(terms[0].factor == EulerRational(EulerPoly::variable() * EulerPoly::linear(-1)));

    GradedOp dg = to_graded(DiffOp::ddx());
    REQUIRE(dg.terms().size() == 1);
    CHECK(dg.terms()[0].shift == -1);
    CHECK(dg.terms()[0].factor == EulerRational(EulerPoly::variable()));

    GradedOp xg = to_graded(DiffOp::x());
    REQUIRE(xg.terms().size() == 1);
    CHECK(xg.terms()[0].shift == 1);
    CHECK(xg.terms()[0].factor == EulerRational(Rational(1)));
}

TEST_CASE("separate on named operators") {
    // Gauss operator with alpha=3, beta=-2, gamma=2:
    // x^2 d^2 + (alpha+beta+1) x d + alpha*beta - x d^2 - gamma d
    Rational alpha = 3, beta = -2, gamma = 2;
    DiffOp op = DiffOp::monomial(1, 2, 2) + DiffOp::monomial(alpha + beta + 1, 1, 1) +
                DiffOp::monomial(alpha * beta, 0, 0) + DiffOp::monomial(-1, 1, 2) +
                DiffOp::monomial(-gamma, 0, 1);
    auto [f, p] = separate(op);
    CHECK(f == EulerPoly::linear(alpha) * EulerPoly::linear(beta));
    GradedOp expect_p = -to_graded(DiffOp::monomial(1, 1, 2) + DiffOp::monomial(gamma, 0, 1));
    CHECK(p == expect_p);

    // 4 x^2 d^2 + 2 x d + x
    DiffOp op2 = DiffOp::monomial(4, 2, 2) + DiffOp::monomial(2, 1, 1) + DiffOp::monomial(1, 1, 0);
    auto [f2, p2] = separate(op2);
    EulerPoly two_d = Rational(2) * EulerPoly::variable();
    CHECK(f2 == two_d * (two_d - EulerPoly(Rational(1))));
    CHECK(p2 == to_graded(DiffOp::x()));

    // pure Euler: x^2 d^2 + x d
    auto [f3, p3] = separate(DiffOp::monomial(1, 2, 2) + DiffOp::monomial(1, 1, 1));
    CHECK(f3 == EulerPoly::variable() * EulerPoly::variable());
    CHECK(p3.is_zero());
}

TEST_CASE("apply_graded basics and resonance") {
    GradedOp g(EulerRational(EulerPoly(Rational(1)), EulerPoly::linear(1)), -1);
    XSeries r = apply_graded(g, mono(3), 10);
    CHECK(r.to_polynomial() == LaurentPoly::monomial(Rational(1, 4), 2));

    GradedOp bad(EulerRational(EulerPoly(Rational(1)), EulerPoly::variable()), -1);
    CHECK_THROWS_AS(apply_graded(bad, mono(0), 4), ResonanceError);
    try {
        apply_graded(bad, mono(0), 4);
    } catch (const ResonanceError& e) {
        CHECK(e.exponent() == Rational(0));
    }

    // embedding of x d^2 + gamma d, gamma=3, on x^4: n(gamma+n-1) x^(n-1)
    GradedOp ch = to_graded(DiffOp::monomial(1, 1, 2) + DiffOp::monomial(3, 0, 1));
    XSeries c = apply_graded(ch, mono(4), 10);
    CHECK(c.to_polynomial() == LaurentPoly::monomial(24, 3));
}

TEST_CASE("action equivalence of diffop and graded routes") {
    testutil::Rng rng(4242);
    std::vector<Rational> exponents;
    for (long k = -3; k <= 6; ++k) exponents.emplace_back(k);
    exponents.emplace_back(Rational(1, 2));
    exponents.emplace_back(Rational(-1, 3));

    for (int i = 0; i < 20; ++i) {
        DiffOp op = rng.diff_op(4, 3, 3);
        GradedOp g = to_graded(op);
        for (const auto& mu : exponents) {
            XSeries via_diff = apply_diffop(op, mono(mu), 12);
            XSeries via_graded = apply_graded(g, mono(mu), 12);
            CHECK(via_diff == via_graded);
        }
    }
}

TEST_CASE("separate round-trip reproduces the operator action") {
    testutil::Rng rng(31337);
    for (int i = 0; i < 20; ++i) {
        DiffOp op = rng.diff_op(4, 3, 3);
        auto [f, p] = separate(op);
        GradedOp recombined = p;
        recombined.add_term(EulerRational(f), 0);
        Rational mu = rng.rational(8, 4);
        XSeries lhs = apply_diffop(op, mono(mu), 10);
        XSeries rhs = apply_graded(recombined, mono(mu), 10);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("euler commutator grades degree-homogeneous operators") {
    testutil::Rng rng(55);
    for (int i = 0; i < 25; ++i) {
        long a = rng.range(0, 4), b = rng.range(0, 4);
        DiffOp op = DiffOp::monomial(rng.nonzero_rational(), a, b);
        long deg = a - b;
        CHECK(commutator(DiffOp::euler(), op) == Rational(deg) * op);
    }
}

TEST_CASE("graded composition matches sequential action") {
    testutil::Rng rng(808);
    for (int i = 0; i < 20; ++i) {
        GradedOp a = to_graded(rng.diff_op(3, 2, 2));
        GradedOp b = to_graded(rng.diff_op(3, 2, 2));
        GradedOp ab = compose(a, b);
        Rational mu = rng.rational(6, 3);
        XSeries seq = apply_graded(a, apply_graded(b, mono(mu), 14), 14);
        XSeries direct = apply_graded(ab, mono(mu), 14);
        CHECK(seq == direct);
    }
}

TEST_CASE("left composition shifts the euler argument") {
    // 1/(D+2) o d on x^3: d gives 3 x^2, then 1/(2+2) scales by 1/4.
    EulerRational r(EulerPoly(Rational(1)), EulerPoly::linear(2));
    GradedOp composed = left_compose(r, to_graded(DiffOp::ddx()));
    XSeries out = apply_graded(composed, mono(3), 10);
    CHECK(out.to_polynomial() == LaurentPoly::monomial(Rational(3, 4), 2));
}

TEST_CASE("falling-factorial embedding round-trips both ways") {
    // x^a d^b survives the graded embedding and its inverse unchanged.
    testutil::Rng rng(616);
    for (int i = 0; i < 25; ++i) {
        DiffOp op = rng.diff_op(4, 3, 3);
        CHECK(to_diffop(to_graded(op)) == op);
    }

    // A polynomial factor distributes over the basis: (D^2, -1) needs
    // ff_2 + ff_1 = D(D-1) + D, so x d^2 + d.
    GradedOp g(EulerRational(EulerPoly::variable() * EulerPoly::variable()), -1);
    DiffOp expect;
    expect.add_term(1, 1, 2);
    expect.add_term(1, 0, 1);
    CHECK(to_diffop(g) == expect);
    CHECK(to_graded(to_diffop(g)) == g);

    // Constant part at a negative shift has no differential realization.
    CHECK_THROWS_AS(to_diffop(GradedOp(EulerRational(Rational(1)), -1)), ShapeError);
    // Rational factors never do.
    EulerRational r(EulerPoly(Rational(1)), EulerPoly::linear(2));
    CHECK_THROWS_AS(to_diffop(GradedOp(r, 1)), ShapeError);
}
