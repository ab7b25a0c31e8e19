#include "eulerop/euler_poly.hpp"

#include <sstream>

namespace eulerop {

Rational EulerPoly::eval(const Rational& mu) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * mu + *it;
    return r;
}

EulerPoly EulerPoly::operator-() const {
    EulerPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

EulerPoly& EulerPoly::operator+=(const EulerPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

EulerPoly& EulerPoly::operator-=(const EulerPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

EulerPoly operator*(const EulerPoly& a, const EulerPoly& b) {
    if (a.is_zero() || b.is_zero()) return EulerPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return EulerPoly(std::move(r));
}

EulerPoly operator*(const Rational& s, const EulerPoly& p) {
    EulerPoly r = p;
    for (auto& v : r.c_) v = s * v;
    r.normalize();
    return r;
}

EulerPoly EulerPoly::shifted(const Rational& s) const {
    EulerPoly r;
    EulerPoly power(Rational(1));
    EulerPoly base = EulerPoly::linear(s);  // D + s
    for (std::size_t k = 0; k < c_.size(); ++k) {
        r += c_[k] * power;
        power = power * base;
    }
    return r;
}

std::pair<EulerPoly, EulerPoly> EulerPoly::divided_by(const EulerPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("EulerPoly: division by zero polynomial");
    EulerPoly q;
    EulerPoly r = *this;
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        long shift = r.degree() - divisor.degree();
        Rational factor = r.leading() / divisor.leading();
        std::vector<Rational> mono(static_cast<std::size_t>(shift) + 1);
        mono.back() = factor;
        EulerPoly term{std::vector<Rational>(mono)};
        q += term;
        r -= term * divisor;
    }
    return {q, r};
}

EulerPoly EulerPoly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * *this;
}

std::string EulerPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        Rational v = coeff(k);
        if (v.is_zero()) continue;
        Rational mag = v.is_negative() ? -v : v;
        if (first) {
            if (v.is_negative()) out << "-";
            first = false;
        } else {
            out << (v.is_negative() ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && k != 0;
        if (!unit) out << mag.str();
        if (k != 0) {
            if (!unit) out << "*";
            out << var;
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

EulerPoly gcd(EulerPoly a, EulerPoly b) {
    while (!b.is_zero()) {
        EulerPoly r = a.divided_by(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

EulerRational::EulerRational(EulerPoly num, EulerPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("EulerRational: zero denominator");
    if (num_.is_zero()) {
        den_ = EulerPoly(Rational(1));
        return;
    }
    EulerPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divided_by(g).first;
        den_ = den_.divided_by(g).first;
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

Rational EulerRational::eval(const Rational& mu) const {
    Rational d = den_.eval(mu);
    if (d.is_zero()) throw ResonanceError(mu);
    return num_.eval(mu) / d;
}

EulerRational EulerRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("EulerRational: reciprocal of zero");
    return EulerRational(den_, num_);
}

EulerRational EulerRational::operator-() const { return EulerRational(-num_, den_); }

EulerRational operator+(const EulerRational& a, const EulerRational& b) {
    return EulerRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EulerRational operator-(const EulerRational& a, const EulerRational& b) {
    return EulerRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

EulerRational operator*(const EulerRational& a, const EulerRational& b) {
    return EulerRational(a.num_ * b.num_, a.den_ * b.den_);
}

std::string EulerRational::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace eulerop
