#pragma once

// Polynomials and rational functions in the Euler operator D = x d/dx.
// Both act diagonally on monomials: F(D) x^mu = F(mu) x^mu, and a rational
// function is undefined exactly where its reduced denominator vanishes.

#include "eulerop/errors.hpp"
#include "eulerop/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eulerop {

class EulerPoly {
public:
    EulerPoly() = default;
    EulerPoly(const Rational& constant) { c_ = {constant}; normalize(); }
    explicit EulerPoly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
        normalize();
    }

    static EulerPoly variable() { return EulerPoly(std::vector<Rational>{0, 1}); }  // D
    static EulerPoly linear(const Rational& c) {
        return EulerPoly(std::vector<Rational>{c, 1});  // D + c
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    Rational coeff(long k) const {
        return k >= 0 && k < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(k)]
                                                          : Rational(0);
    }

    Rational eval(const Rational& mu) const;

    EulerPoly operator-() const;
    EulerPoly& operator+=(const EulerPoly& o);
    EulerPoly& operator-=(const EulerPoly& o);
    friend EulerPoly operator+(EulerPoly a, const EulerPoly& b) { return a += b; }
    friend EulerPoly operator-(EulerPoly a, const EulerPoly& b) { return a -= b; }
    friend EulerPoly operator*(const EulerPoly& a, const EulerPoly& b);
    friend EulerPoly operator*(const Rational& s, const EulerPoly& p);
    friend bool operator==(const EulerPoly& a, const EulerPoly& b) { return a.c_ == b.c_; }

    // p(D + s): substitute a shifted argument.
    EulerPoly shifted(const Rational& s) const;

    // Exact Euclidean division; returns (quotient, remainder).
    std::pair<EulerPoly, EulerPoly> divided_by(const EulerPoly& divisor) const;

    EulerPoly monic() const;

    std::string str(const std::string& var = "D") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;  // ascending powers of D, no trailing zeros
};

EulerPoly gcd(EulerPoly a, EulerPoly b);  // monic, or zero if both zero

class EulerRational {
public:
    EulerRational() : num_(0), den_(1) {}
    EulerRational(const Rational& constant) : num_(constant), den_(1) {}
    EulerRational(EulerPoly num) : num_(std::move(num)), den_(1) {}
    EulerRational(EulerPoly num, EulerPoly den);

    const EulerPoly& num() const { return num_; }
    const EulerPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool defined_at(const Rational& mu) const { return !den_.eval(mu).is_zero(); }
    // Throws ResonanceError when the reduced denominator vanishes at mu.
    Rational eval(const Rational& mu) const;

    EulerRational reciprocal() const;
    EulerRational shifted(const Rational& s) const {
        return EulerRational(num_.shifted(s), den_.shifted(s));
    }

    EulerRational operator-() const;
    friend EulerRational operator+(const EulerRational& a, const EulerRational& b);
    friend EulerRational operator-(const EulerRational& a, const EulerRational& b);
    friend EulerRational operator*(const EulerRational& a, const EulerRational& b);
    friend bool operator==(const EulerRational& a, const EulerRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::string& var = "D") const;

private:
    EulerPoly num_;
    EulerPoly den_;  // monic, nonzero, coprime to num_
};

}  // namespace eulerop
