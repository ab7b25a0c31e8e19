// Rodriguez formulas against the exponential-route family builders and the
// recurrence oracles, plus generating functions compared coefficient-by-
// coefficient between summation and closed form.

#include "doctest.h"
#include "eulerop/families.hpp"
#include "eulerop/identities.hpp"
#include "test_util.hpp"

using namespace eulerop;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long, Rational>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.set(e, c);
    return p;
}

}  // namespace

TEST_CASE("weighted differentiation applies the product rule symbolically") {
    WeightedPoly plain{poly({{2, 1}}), Weight::None};
    CHECK(plain.derivative().poly == poly({{1, 2}}));
    CHECK(plain.derivative().weight == Weight::None);

    WeightedPoly exp_x{poly({{2, 1}}), Weight::ExpNegX};
    CHECK(exp_x.derivative().poly == poly({{1, 2}, {2, -1}}));
    CHECK(exp_x.derivative().weight == Weight::ExpNegX);

    WeightedPoly gauss{LaurentPoly(Rational(1)), Weight::ExpNegXSquared};
    CHECK(gauss.derivative().poly == poly({{1, -2}}));
    CHECK(gauss.derivative().derivative().poly == poly({{0, -2}, {2, 4}}));
}

TEST_CASE("laguerre rodriguez formula reproduces the polynomials") {
    CHECK(rodriguez_laguerre(0) == LaurentPoly(Rational(1)));
    CHECK(rodriguez_laguerre(2) == poly({{0, 1}, {1, -2}, {2, Rational(1, 2)}}));
    CHECK(rodriguez_laguerre(5) == laguerre(5, 0));
    for (long n = 0; n <= 20; ++n) {
        CHECK(rodriguez_laguerre(n) == laguerre(n, 0));
        CHECK(rodriguez_laguerre(n) == oracle_recurrence(Family::LAGUERRE, n, 0));
    }
}

TEST_CASE("hermite rodriguez formula reproduces the polynomials") {
    CHECK(rodriguez_hermite(0) == LaurentPoly(Rational(1)));
    CHECK(rodriguez_hermite(2) == poly({{0, -2}, {2, 4}}));
    CHECK(rodriguez_hermite(3) == poly({{1, -12}, {3, 8}}));
    for (long n = 0; n <= 20; ++n) {
        CHECK(rodriguez_hermite(n) == hermite(n));
        CHECK(rodriguez_hermite(n) == oracle_recurrence(Family::HERMITE, n));
    }
}

TEST_CASE("reverse rodriguez derivation matches the exponential form") {
    CHECK(expform_from_rodriguez(1) == poly({{1, 2}}));
    CHECK(expform_from_rodriguez(2) == poly({{0, -2}, {2, 4}}));
    CHECK(expform_from_rodriguez(4) == hermite(4));
    for (long n = 0; n <= 20; ++n) {
        LaurentPoly p;
        CHECK_NOTHROW(p = expform_from_rodriguez(n));
        CHECK(p == hermite(n));
    }
}

TEST_CASE("laguerre generating function agrees with its closed form") {
    GfReport small = gf_laguerre(1);
    CHECK(small.lhs.coeff(0) == LaurentPoly(Rational(1)));
    CHECK(small.rhs.coeff(0) == LaurentPoly(Rational(1)));
    CHECK(small.rhs.coeff(1) == poly({{0, 1}, {1, -1}}));

    GfReport full = gf_laguerre(15);
    CHECK(full.equal);
    CHECK(full.first_mismatch == -1);
    for (long n = 0; n <= 15; ++n) CHECK(full.lhs.coeff(n) == full.rhs.coeff(n));
}

TEST_CASE("chebyshev generating function agrees with its closed form") {
    GfReport r = gf_chebyshev(12);
    CHECK(r.equal);
    CHECK(r.rhs.coeff(1) == poly({{1, 2}}));
    CHECK(r.rhs.coeff(2) == poly({{0, -1}, {2, 4}}));
}

TEST_CASE("operator route to the laguerre generating function") {
    // No applications: the bivariate truncation of e^{-xt} itself.
    TSeries bare = gf_laguerre_operator(4, 4, 0);
    CHECK(bare.coeff(0) == LaurentPoly(Rational(1)));
    CHECK(bare.coeff(1) == poly({{1, -1}}));
    CHECK(bare.coeff(3) == poly({{3, Rational(-1, 6)}}));

    // One application: t^2 picks up both cross terms of e^{-xt}(t - xt^2).
    TSeries once = gf_laguerre_operator(4, 4, 1);
    CHECK(once.coeff(1) == poly({{0, 1}, {1, -1}}));
    CHECK(once.coeff(2) == poly({{1, -2}, {2, Rational(1, 2)}}));

    TSeries op_route = gf_laguerre_operator(6, 6);
    GfReport closed = gf_laguerre(6);
    CHECK(op_route == closed.rhs);
    for (long n = 0; n <= 6; ++n) CHECK(op_route.coeff(n) == laguerre(n, 0));

    // A narrow window drops the high powers but leaves low ones exact.
    TSeries narrow = gf_laguerre_operator(6, 2);
    for (long n = 0; n <= 6; ++n)
        CHECK(narrow.coeff(n) == closed.rhs.coeff(n).truncated_above(2));
}
