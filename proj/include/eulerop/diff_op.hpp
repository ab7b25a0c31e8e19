#pragma once

// Differential operators in one variable: finite sums of terms
// c * x^a * (d/dx)^b in canonical form. Composition follows the Leibniz
// normal-ordering rule, so the algebra is genuinely non-commutative.

#include "eulerop/rational.hpp"
#include "eulerop/xseries.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eulerop {

struct OpTerm {
    Rational coeff;
    long x_power;  // a >= 0
    long d_order;  // b >= 0

    long degree() const { return x_power - d_order; }
};

class DiffOp {
public:
    DiffOp() = default;

    static DiffOp monomial(const Rational& coeff, long x_power, long d_order);
    static DiffOp identity() { return monomial(1, 0, 0); }
    static DiffOp x() { return monomial(1, 1, 0); }
    static DiffOp ddx() { return monomial(1, 0, 1); }
    static DiffOp euler() { return monomial(1, 1, 1); }  // D = x d/dx

    std::vector<OpTerm> terms() const;
    bool is_zero() const { return t_.empty(); }
    Rational coeff(long x_power, long d_order) const;
    void add_term(const Rational& coeff, long x_power, long d_order);

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const Rational& s, const DiffOp& op);
    // Composition: (a * b) f = a(b(f)).
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.t_ == b.t_; }

    DiffOp pow(long n) const;

    // Set of distinct term degrees a - b, ascending.
    std::vector<long> degrees() const;
    bool is_degree_homogeneous() const { return degrees().size() <= 1; }

    std::string str() const;

private:
    std::map<std::pair<long, long>, Rational> t_;  // (a, b) -> coeff, no zeros
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Exact action through the requested truncation; terminated inputs give
// terminated outputs.
XSeries apply_diffop(const DiffOp& op, const XSeries& s, long order);

}  // namespace eulerop
