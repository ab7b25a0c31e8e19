#include "doctest.h"

#include "eulerop/laurent.hpp"
#include "eulerop/rational.hpp"
#include "eulerop/tseries.hpp"
#include "eulerop/xseries.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace eulerop;

TEST_CASE("rational canonical form and text round-trip") {
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(4, -2).str() == "-2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5).str() == "5");

    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-9/12") == Rational(-3, 4));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse("-0") == Rational(0));

    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random values") {
    testutil::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // round-trip through text
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("pochhammer") {
    testutil::Rng rng(7);
    Rational a = rng.rational();
    CHECK(pochhammer(a, 0) == Rational(1));
    CHECK(pochhammer(3, 2) == Rational(12));
    CHECK(pochhammer(-2, 3) == Rational(0));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("falling factorial") {
    testutil::Rng rng(8);
    CHECK(falling_factorial(3, 2) == Rational(6));
    CHECK(falling_factorial(rng.rational(), 0) == Rational(1));
    CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("laurent polynomial ring axioms") {
    testutil::Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly p = rng.laurent(4, -3, 5);
        LaurentPoly q = rng.laurent(4, -3, 5);
        LaurentPoly r = rng.laurent(3, -2, 4);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == LaurentPoly());
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).max_degree() == p.max_degree() + q.max_degree());
    }
}

TEST_CASE("laurent polynomial basics") {
    LaurentPoly p = LaurentPoly::monomial(Rational(1, 2), 2) +
                    LaurentPoly::monomial(-2, 0) + LaurentPoly::monomial(3, -1);
    CHECK(p.coeff(2) == Rational(1, 2));
    CHECK(p.coeff(5) == Rational(0));
    CHECK(p.min_degree() == -1);
    CHECK(p.max_degree() == 2);
    CHECK(p.eval(2) == Rational(2) - Rational(2) + Rational(3, 2));
    CHECK(p.derivative() == LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-3, -2));
    CHECK(p.shifted(2).min_degree() == 1);
    CHECK(p.str() == "3*x^-1 - 2 + 1/2*x^2");
}

TEST_CASE("xseries to laurent round-trip") {
    LaurentPoly p = LaurentPoly::monomial(Rational(7, 3), 4) + LaurentPoly::monomial(-1, 1);
    XSeries s = XSeries::from_polynomial(p, Direction::Ascending);
    CHECK(s.terminated());
    CHECK(s.base() == Rational(1));
    CHECK(s.to_polynomial() == p);

    XSeries d = XSeries::from_polynomial(p, Direction::Descending);
    CHECK(d.base() == Rational(4));
    CHECK(d.to_polynomial() == p);
    CHECK(s == d);  // same content, terminated comparison is by exponent
}

TEST_CASE("xseries windows and equality") {
    XSeries s(Rational(1, 2), Direction::Ascending, 3);
    s.set(0, 1);
    s.set(2, Rational(-1, 3));
    CHECK(s.coeff_at_exponent(Rational(5, 2)) == Rational(-1, 3));
    CHECK(s.coeff_at_exponent(Rational(3, 2)) == Rational(0));
    CHECK(s.is_known(Rational(7, 2)));        // offset 3, inside window
    CHECK(!s.is_known(Rational(9, 2)));       // offset 4, beyond truncation
    CHECK(s.is_known(Rational(-1, 2)));       // below base: identically zero
    CHECK(s.is_known(Rational(0)));           // off-grid exponent never touched
    CHECK_THROWS_AS(s.set(4, 1), std::domain_error);
    CHECK_THROWS_AS(s.to_polynomial(), std::domain_error);

    XSeries t(Rational(1, 2), Direction::Ascending, 3);
    t.set(0, 1);
    t.set(2, Rational(-1, 3));
    CHECK(s == t);
    t.set(2, Rational(-1, 4));
    CHECK(!(s == t));
}

TEST_CASE("tseries inverse examples") {
    long n = 6;
    // 1 - t
    TSeries s = TSeries::constant(LaurentPoly(1), n);
    s.set(1, LaurentPoly(-1));
    TSeries inv = tseries_inv(s);
    for (long m = 0; m <= n; ++m) CHECK(inv.coeff(m) == LaurentPoly(1));
    CHECK(s * inv == TSeries::constant(LaurentPoly(1), n));

    // 1 - 2xt + t^2
    TSeries c = TSeries::constant(LaurentPoly(1), n);
    c.set(1, LaurentPoly::monomial(-2, 1));
    c.set(2, LaurentPoly(1));
    TSeries u = tseries_inv(c);
    CHECK(u.coeff(0) == LaurentPoly(1));
    CHECK(u.coeff(1) == LaurentPoly::monomial(2, 1));
    CHECK(u.coeff(2) == LaurentPoly::monomial(4, 2) + LaurentPoly(-1));

    // 1
    TSeries one = TSeries::constant(LaurentPoly(1), n);
    CHECK(tseries_inv(one) == one);

    TSeries bad = TSeries::constant(LaurentPoly::variable(), n);
    CHECK_THROWS_AS(tseries_inv(bad), std::domain_error);
    CHECK_THROWS_AS(tseries_inv(TSeries(3)), std::domain_error);
}

TEST_CASE("tseries exponential examples") {
    long n = 5;
    CHECK(tseries_exp(TSeries(n)) == TSeries::constant(LaurentPoly(1), n));

    // exp(-xt)
    TSeries s(n);
    s.set(1, LaurentPoly::monomial(-1, 1));
    TSeries e = tseries_exp(s);
    Rational inv_fact = 1;
    for (long m = 0; m <= n; ++m) {
        if (m > 0) inv_fact /= Rational(m);
        Rational sign = m % 2 == 0 ? 1 : -1;
        CHECK(e.coeff(m) == LaurentPoly::monomial(sign * inv_fact, m));
    }

    TSeries bad = TSeries::constant(LaurentPoly(2), n);
    CHECK_THROWS_AS(tseries_exp(bad), std::domain_error);
}

TEST_CASE("laguerre generating function coefficient at t^2 by direct assembly") {
    long n = 4;
    TSeries one_minus_t = TSeries::constant(LaurentPoly(1), n);
    one_minus_t.set(1, LaurentPoly(-1));
    TSeries inv = tseries_inv(one_minus_t);
    TSeries xt(n);
    xt.set(1, LaurentPoly::variable());
    TSeries arg = -(xt * inv);
    TSeries g = tseries_exp(arg) * inv;
    LaurentPoly expect = LaurentPoly::monomial(Rational(1, 2), 2) +
                         LaurentPoly::monomial(-2, 1) + LaurentPoly(1);
    CHECK(g.coeff(2) == expect);
}

TEST_CASE("tseries inv and exp against Cauchy-product reconstruction") {
    testutil::Rng rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        long n = rng.range(3, 12);
        TSeries s(n);
        s.set(0, LaurentPoly(rng.nonzero_rational()));
        for (long m = 1; m <= n; ++m) s.set(m, rng.laurent(2, 0, 3));

        TSeries inv = tseries_inv(s);
        TSeries prod = s * inv;
        CHECK(prod == TSeries::constant(LaurentPoly(1), n));

        TSeries arg = s;
        arg.set(0, LaurentPoly());
        TSeries e = tseries_exp(arg);
        // reconstruct sum_m arg^m/m! directly
        TSeries direct = TSeries::constant(LaurentPoly(1), n);
        TSeries pw = TSeries::constant(LaurentPoly(1), n);
        Rational inv_fact = 1;
        for (long m = 1; m <= n; ++m) {
            pw = pw * arg;
            inv_fact /= Rational(m);
            TSeries term = pw;
            for (long k = 0; k <= n; ++k) term.set(k, inv_fact * term.coeff(k));
            direct += term;
        }
        CHECK(e == direct);
    }
}
