#pragma once

// Exact rational scalar used everywhere in the library. Thin wrapper over
// boost::multiprecision::cpp_rational that pins down the canonical form
// (always reduced, denominator > 0) and the "p/q" text format. No floating
// point appears anywhere in a computation path.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerop {

using BigInt = boost::multiprecision::cpp_int;
using BigRationalImpl = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(BigInt n) : v_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den)
        : v_(den < 0 ? -num : num, checked_den(den)) {}
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p" or "p/q" with optional leading '-' on p; q must be a
    // positive integer literal. Anything else is rejected.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_nonnegative_integer() const { return is_integer() && v_ >= 0; }

    // Requires an integer value that fits in long.
    long as_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        return static_cast<long>(numerator().convert_to<std::int64_t>());
    }

    std::string str() const { return v_.str(); }

    Rational operator-() const { return Rational(BigRationalImpl(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(BigRationalImpl v) : v_(std::move(v)) {}

    static BigInt checked_den(const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        return den < 0 ? BigInt(-den) : den;
    }

    BigRationalImpl v_;
};

BigInt factorial(long n);
BigInt binomial(long n, long k);

// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, long n);

// Falling factorial mu (mu-1) ... (mu-b+1), with b = 0 giving 1.
Rational falling_factorial(const Rational& mu, long b);

}  // namespace eulerop
