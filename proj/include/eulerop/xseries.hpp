#pragma once

// Generalized power series in x: one rational base exponent plus integer
// offsets in a fixed direction. A series is either truncated at a known
// offset (coefficients beyond it are unknown) or terminated (it is exactly
// the finite sum shown).

#include "eulerop/laurent.hpp"
#include "eulerop/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace eulerop {

enum class Direction { Ascending, Descending };

class XSeries {
public:
    XSeries(Rational base, Direction dir, std::optional<long> truncation)
        : base_(std::move(base)), dir_(dir), trunc_(truncation) {
        if (trunc_ && *trunc_ < 0) throw std::domain_error("XSeries: negative truncation");
    }

    static XSeries monomial(const Rational& exponent, Direction dir,
                            std::optional<long> truncation) {
        XSeries s(exponent, dir, truncation);
        s.set(0, 1);
        return s;
    }

    // A terminated series holding exactly the given polynomial.
    static XSeries from_polynomial(const LaurentPoly& p, Direction dir = Direction::Ascending);

    const Rational& base() const { return base_; }
    Direction direction() const { return dir_; }
    const std::optional<long>& truncation() const { return trunc_; }
    bool terminated() const { return !trunc_.has_value(); }
    const std::map<long, Rational>& coefficients() const { return c_; }

    int step() const { return dir_ == Direction::Ascending ? 1 : -1; }
    Rational exponent_at(long offset) const { return base_ + Rational(step() * offset); }

    Rational coeff(long offset) const {
        auto it = c_.find(offset);
        return it == c_.end() ? Rational(0) : it->second;
    }
    // Coefficient of x^e; zero when e is not a represented exponent.
    Rational coeff_at_exponent(const Rational& e) const;

    // True when the coefficient of x^e is determined by this series: inside
    // the stored window, or on the side where the series is identically zero.
    bool is_known(const Rational& e) const;

    void set(long offset, const Rational& value);
    void add(long offset, const Rational& value) { set(offset, coeff(offset) + value); }

    bool is_zero() const { return c_.empty(); }
    XSeries scaled(const Rational& s) const;

    // Requires terminated and all exponents integers.
    LaurentPoly to_polynomial() const;

    std::string str() const;

    // Mathematical equality: terminated series compare by exponent content
    // alone; truncated series also require matching window metadata.
    friend bool operator==(const XSeries& a, const XSeries& b);

private:
    Rational base_;
    Direction dir_;
    std::optional<long> trunc_;
    std::map<long, Rational> c_;
};

// (coefficient, offset) of the first stored nonzero term, if any.
std::optional<std::pair<Rational, long>> leading_term(const XSeries& s);

// The single rational q with a = q*b, if one exists (exact termwise ratio
// over the union of windows; nullopt when no such scale works).
std::optional<Rational> scale_between(const XSeries& a, const XSeries& b);

}  // namespace eulerop
