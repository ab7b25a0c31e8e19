#include "eulerop/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerop {

long LaurentPoly::min_degree() const {
    if (c_.empty()) throw std::domain_error("LaurentPoly: degree of zero");
    return c_.begin()->first;
}

long LaurentPoly::max_degree() const {
    if (c_.empty()) throw std::domain_error("LaurentPoly: degree of zero");
    return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_to(e, v);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_to(e, -v);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) r.add_to(ea + eb, va * vb);
    return r;
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
    LaurentPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, v] : p.c_) r.c_[e] = s * v;
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_)
        if (e != 0) r.set(e - 1, Rational(e) * v);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (const auto& [e, v] : c_) {
        Rational pw = 1;
        long m = e < 0 ? -e : e;
        for (long k = 0; k < m; ++k) pw *= x;
        if (e < 0) pw = Rational(1) / pw;
        r += v * pw;
    }
    return r;
}

LaurentPoly LaurentPoly::truncated_above(long max_exponent) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) {
        if (e > max_exponent) break;
        r.c_[e] = v;
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : c_) {
        Rational mag = v.is_negative() ? -v : v;
        if (first) {
            if (v.is_negative()) out << "-";
            first = false;
        } else {
            out << (v.is_negative() ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && e != 0;
        if (!unit) out << mag.str();
        if (e != 0) {
            if (!unit) out << "*";
            out << "x";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace eulerop
