#include "eulerop/xseries.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerop {

XSeries XSeries::from_polynomial(const LaurentPoly& p, Direction dir) {
    if (p.is_zero()) return XSeries(0, dir, std::nullopt);
    long anchor = dir == Direction::Ascending ? p.min_degree() : p.max_degree();
    XSeries s(Rational(anchor), dir, std::nullopt);
    for (const auto& [e, v] : p.coefficients()) s.set((e - anchor) * s.step(), v);
    return s;
}

Rational XSeries::coeff_at_exponent(const Rational& e) const {
    Rational diff = (e - base_) * Rational(step());
    if (!diff.is_nonnegative_integer()) return 0;
    return coeff(diff.as_long());
}

bool XSeries::is_known(const Rational& e) const {
    if (terminated()) return true;
    Rational diff = (e - base_) * Rational(step());
    if (!diff.is_integer()) return true;  // never touched by this series
    long k = diff.as_long();
    return k <= *trunc_;  // k < 0 lies on the identically-zero side
}

void XSeries::set(long offset, const Rational& value) {
    if (offset < 0) throw std::domain_error("XSeries: negative offset");
    if (trunc_ && offset > *trunc_) throw std::domain_error("XSeries: offset beyond truncation");
    if (value.is_zero())
        c_.erase(offset);
    else
        c_[offset] = value;
}

XSeries XSeries::scaled(const Rational& s) const {
    XSeries r(base_, dir_, trunc_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_[k] = s * v;
    return r;
}

LaurentPoly XSeries::to_polynomial() const {
    if (!terminated()) throw std::domain_error("XSeries: not terminated");
    LaurentPoly p;
    for (const auto& [k, v] : c_) {
        Rational e = exponent_at(k);
        if (!e.is_integer()) throw std::domain_error("XSeries: non-integer exponent");
        p.set(e.as_long(), v);
    }
    return p;
}

std::string XSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : c_) {
        Rational mag = v.is_negative() ? -v : v;
        if (first) {
            if (v.is_negative()) out << "-";
            first = false;
        } else {
            out << (v.is_negative() ? " - " : " + ");
        }
        Rational e = exponent_at(k);
        bool unit = mag == Rational(1) && !e.is_zero();
        if (!unit) out << mag.str();
        if (!e.is_zero()) {
            if (!unit) out << "*";
            out << "x";
            if (e != Rational(1)) out << "^" << (e.is_integer() ? e.str() : "(" + e.str() + ")");
        }
    }
    if (first) out << "0";
    if (!terminated()) {
        out << " + O(x^";
        Rational edge = exponent_at(*trunc_ + 1);
        out << (edge.is_integer() ? edge.str() : "(" + edge.str() + ")") << ")";
    }
    return out.str();
}

bool operator==(const XSeries& a, const XSeries& b) {
    if (a.terminated() != b.terminated()) return false;
    if (a.terminated()) {
        std::map<Rational, Rational> ma, mb;
        for (const auto& [k, v] : a.c_) ma[a.exponent_at(k)] = v;
        for (const auto& [k, v] : b.c_) mb[b.exponent_at(k)] = v;
        return ma == mb;
    }
    return a.dir_ == b.dir_ && a.base_ == b.base_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
}

std::optional<std::pair<Rational, long>> leading_term(const XSeries& s) {
    if (s.coefficients().empty()) return std::nullopt;
    const auto& [k, v] = *s.coefficients().begin();
    return std::make_pair(v, k);
}

std::optional<Rational> scale_between(const XSeries& a, const XSeries& b) {
    std::map<Rational, Rational> ma, mb;
    for (const auto& [k, v] : a.coefficients()) ma[a.exponent_at(k)] = v;
    for (const auto& [k, v] : b.coefficients()) mb[b.exponent_at(k)] = v;
    if (ma.empty() || mb.empty()) return std::nullopt;
    if (ma.size() != mb.size()) return std::nullopt;
    std::optional<Rational> scale;
    auto ia = ma.begin();
    auto ib = mb.begin();
    for (; ia != ma.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        Rational s = ia->second / ib->second;
        if (scale && *scale != s) return std::nullopt;
        scale = s;
    }
    return scale;
}

}  // namespace eulerop
