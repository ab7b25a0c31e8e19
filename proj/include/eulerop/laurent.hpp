#pragma once

// Laurent polynomials in x with integer exponents (possibly negative) and
// exact rational coefficients. Stored sparsely; zero coefficients are never
// kept, so structural equality is mathematical equality.

#include "eulerop/rational.hpp"

#include <map>
#include <string>

namespace eulerop {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant) { set(0, constant); }

    static LaurentPoly monomial(const Rational& coeff, long exponent) {
        LaurentPoly p;
        p.set(exponent, coeff);
        return p;
    }
    static LaurentPoly variable() { return monomial(1, 1); }

    const std::map<long, Rational>& coefficients() const { return c_; }
    Rational coeff(long exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void set(long exponent, const Rational& value) {
        if (value.is_zero())
            c_.erase(exponent);
        else
            c_[exponent] = value;
    }
    void add_to(long exponent, const Rational& value) { set(exponent, coeff(exponent) + value); }

    bool is_zero() const { return c_.empty(); }
    long min_degree() const;  // requires nonzero
    long max_degree() const;  // requires nonzero

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    LaurentPoly derivative() const;
    LaurentPoly shifted(long k) const;  // multiply by x^k
    Rational eval(const Rational& x) const;

    // Drop every term with exponent above `max_exponent`.
    LaurentPoly truncated_above(long max_exponent) const;

    std::string str() const;

private:
    std::map<long, Rational> c_;
};

}  // namespace eulerop
