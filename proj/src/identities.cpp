#include "eulerop/identities.hpp"

#include "eulerop/diff_op.hpp"
#include "eulerop/errors.hpp"
#include "eulerop/families.hpp"
#include "eulerop/graded_op.hpp"
#include "eulerop/solver.hpp"
#include "eulerop/xseries.hpp"

#include <algorithm>

namespace eulerop {

namespace {

Rational two_pow(long n) {
    Rational r(1);
    for (long k = 0; k < n; ++k) r = Rational(2) * r;
    return r;
}

LaurentPoly apply_to_poly(const DiffOp& op, const LaurentPoly& p) {
    return apply_diffop(op, XSeries::from_polynomial(p), 0).to_polynomial();
}

long first_mismatch(const TSeries& a, const TSeries& b) {
    long order = std::min(a.order(), b.order());
    for (long m = 0; m <= order; ++m)
        if (!(a.coeff(m) == b.coeff(m))) return m;
    return a.order() == b.order() ? -1 : order + 1;
}

GfReport make_report(TSeries lhs, TSeries rhs) {
    long mismatch = first_mismatch(lhs, rhs);
    return {std::move(lhs), std::move(rhs), mismatch < 0, mismatch};
}

// 1/(1-t) through the given order.
TSeries geometric(long n_t) {
    TSeries one_minus_t = TSeries::constant(LaurentPoly(Rational(1)), n_t);
    one_minus_t.set(1, LaurentPoly(Rational(-1)));
    return tseries_inv(one_minus_t);
}

}  // namespace

WeightedPoly WeightedPoly::derivative() const {
    LaurentPoly d = poly.derivative();
    switch (weight) {
        case Weight::None:
            break;
        case Weight::ExpNegX:
            d -= poly;
            break;
        case Weight::ExpNegXSquared:
            d -= Rational(2) * poly.shifted(1);
            break;
    }
    return {d, weight};
}

LaurentPoly rodriguez_laguerre(long n) {
    if (n < 0) throw std::domain_error("rodriguez_laguerre: negative index");
    WeightedPoly w{LaurentPoly::monomial(1, n), Weight::ExpNegX};
    for (long k = 0; k < n; ++k) w = w.derivative();
    return Rational(1) / Rational(factorial(n)) * w.poly;
}

LaurentPoly rodriguez_hermite(long n) {
    if (n < 0) throw std::domain_error("rodriguez_hermite: negative index");
    WeightedPoly w{LaurentPoly(Rational(1)), Weight::ExpNegXSquared};
    for (long k = 0; k < n; ++k) w = w.derivative();
    return (n % 2 == 0 ? Rational(1) : Rational(-1)) * w.poly;
}

LaurentPoly expform_from_rodriguez(long n) {
    if (n < 0) throw std::domain_error("expform_from_rodriguez: negative index");
    DiffOp a = DiffOp::ddx() - Rational(2) * DiffOp::x();
    LaurentPoly p(Rational(1));
    for (long k = 0; k < n; ++k) p = apply_to_poly(a, p);
    LaurentPoly result = (n % 2 == 0 ? Rational(1) : Rational(-1)) * p;

    GradedOp quarter_d2 = Rational(1, 4) * to_graded(DiffOp::monomial(1, 0, 2));
    LaurentPoly exp_route =
        two_pow(n) * exp_apply(quarter_d2, Rational(n), n, -1).to_polynomial();
    if (!(result == exp_route))
        throw Error("expform_from_rodriguez: operator expansion disagrees with the "
                    "exponential route");
    return result;
}

GfReport gf_laguerre(long n_t) {
    if (n_t < 0) throw std::domain_error("gf_laguerre: negative order");
    TSeries lhs(n_t);
    for (long n = 0; n <= n_t; ++n) lhs.set(n, laguerre(n, 0));

    TSeries inv = geometric(n_t);
    TSeries minus_xt(n_t);
    if (n_t >= 1) minus_xt.set(1, LaurentPoly::monomial(-1, 1));
    TSeries rhs = tseries_exp(minus_xt * inv) * inv;
    return make_report(std::move(lhs), std::move(rhs));
}

GfReport gf_chebyshev(long n_t) {
    if (n_t < 0) throw std::domain_error("gf_chebyshev: negative order");
    TSeries lhs(n_t);
    for (long n = 0; n <= n_t; ++n) lhs.set(n, chebyshev_u(n));

    TSeries denom = TSeries::constant(LaurentPoly(Rational(1)), n_t);
    if (n_t >= 1) denom.set(1, LaurentPoly::monomial(-2, 1));
    if (n_t >= 2) denom.set(2, LaurentPoly(Rational(1)));
    return make_report(std::move(lhs), tseries_inv(denom));
}

TSeries gf_laguerre_operator(long n_t, long n_x, long max_applications) {
    if (n_t < 0 || n_x < 0) throw std::domain_error("gf_laguerre_operator: negative order");
    TSeries term(n_t);
    for (long n = 0; n <= n_t; ++n) {
        Rational c = (n % 2 == 0 ? Rational(1) : Rational(-1)) / Rational(factorial(n));
        term.set(n, LaurentPoly::monomial(c, n));
    }

    DiffOp b = DiffOp::monomial(1, 1, 2) + DiffOp::ddx();
    TSeries acc = term;
    for (long m = 1; !term.is_zero(); ++m) {
        if (max_applications >= 0 && m > max_applications) break;
        TSeries next(n_t);
        for (long n = 0; n <= n_t; ++n)
            next.set(n, Rational(-1, m) * apply_to_poly(b, term.coeff(n)));
        term = std::move(next);
        acc += term;
    }

    TSeries windowed(n_t);
    for (long n = 0; n <= n_t; ++n) windowed.set(n, acc.coeff(n).truncated_above(n_x));
    return windowed;
}

}  // namespace eulerop
