#include "eulerop/tseries.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerop {

namespace {

void require_same_order(const TSeries& a, const TSeries& b) {
    if (a.order() != b.order()) throw std::domain_error("TSeries: order mismatch");
}

}  // namespace

bool TSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

TSeries TSeries::operator-() const {
    TSeries r(order());
    for (long m = 0; m <= order(); ++m) r.set(m, -coeff(m));
    return r;
}

TSeries& TSeries::operator+=(const TSeries& o) {
    require_same_order(*this, o);
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
    require_same_order(*this, o);
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] -= o.c_[m];
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    require_same_order(a, b);
    TSeries r(a.order());
    for (long m = 0; m <= a.order(); ++m) {
        LaurentPoly acc;
        for (long k = 0; k <= m; ++k) acc += a.coeff(k) * b.coeff(m - k);
        r.set(m, acc);
    }
    return r;
}

TSeries operator*(const LaurentPoly& p, const TSeries& s) {
    TSeries r(s.order());
    for (long m = 0; m <= s.order(); ++m) r.set(m, p * s.coeff(m));
    return r;
}

std::string TSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (long m = 0; m <= order(); ++m) {
        if (coeff(m).is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << coeff(m).str() << ")";
        if (m > 0) out << "*t" << (m > 1 ? "^" + std::to_string(m) : "");
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^" << order() + 1 << ")";
    return out.str();
}

TSeries tseries_inv(const TSeries& s) {
    const LaurentPoly& c0 = s.coeff(0);
    bool constant = !c0.is_zero() && c0.min_degree() == 0 && c0.max_degree() == 0;
    if (!constant) throw std::domain_error("tseries_inv: constant term is not an invertible constant");
    Rational inv0 = Rational(1) / c0.coeff(0);

    TSeries r(s.order());
    r.set(0, LaurentPoly(inv0));
    for (long n = 1; n <= s.order(); ++n) {
        LaurentPoly acc;
        for (long k = 1; k <= n; ++k) acc += s.coeff(k) * r.coeff(n - k);
        r.set(n, (-inv0) * acc);
    }
    return r;
}

TSeries tseries_exp(const TSeries& s) {
    if (!s.coeff(0).is_zero()) throw std::domain_error("tseries_exp: nonzero constant term");
    TSeries r = TSeries::constant(LaurentPoly(Rational(1)), s.order());
    TSeries power = TSeries::constant(LaurentPoly(Rational(1)), s.order());
    Rational inv_fact = 1;
    for (long m = 1; m <= s.order(); ++m) {
        power = power * s;
        inv_fact /= Rational(m);
        TSeries term = power;
        for (long k = 0; k <= s.order(); ++k) term.set(k, inv_fact * term.coeff(k));
        r += term;
    }
    return r;
}

}  // namespace eulerop
