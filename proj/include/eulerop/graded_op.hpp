#pragma once

// Graded (Euler normal form) operators: sums of terms (R(D), shift d) acting
// on monomials by x^mu -> R(mu) * x^(mu+d). R is evaluated at the SOURCE
// exponent; composition with an Euler-rational on the left therefore shifts
// that factor's argument by the inner term's degree.

#include "eulerop/diff_op.hpp"
#include "eulerop/euler_poly.hpp"
#include "eulerop/xseries.hpp"

#include <map>
#include <string>
#include <vector>

namespace eulerop {

struct GradedTerm {
    EulerRational factor;
    long shift;
};

class GradedOp {
public:
    GradedOp() = default;
    GradedOp(EulerRational factor, long shift) { add_term(std::move(factor), shift); }

    static GradedOp identity() { return GradedOp(EulerRational(Rational(1)), 0); }

    std::vector<GradedTerm> terms() const;
    bool is_zero() const { return t_.empty(); }
    const EulerRational* term_at_shift(long shift) const;
    void add_term(EulerRational factor, long shift);

    GradedOp operator-() const;
    GradedOp& operator+=(const GradedOp& o);
    GradedOp& operator-=(const GradedOp& o);
    friend GradedOp operator+(GradedOp a, const GradedOp& b) { return a += b; }
    friend GradedOp operator-(GradedOp a, const GradedOp& b) { return a -= b; }
    friend GradedOp operator*(const Rational& s, const GradedOp& op);
    friend bool operator==(const GradedOp& a, const GradedOp& b) { return a.t_ == b.t_; }

    std::vector<long> shifts() const;

    std::string str() const;

private:
    std::map<long, EulerRational> t_;  // shift -> factor, no zero factors
};

// Action-preserving embedding: each x^a d^b becomes the falling-factorial
// polynomial at shift a - b.
GradedOp to_graded(const DiffOp& op);

// Split the graded form of op into the shift-0 polynomial F(D) and the
// remaining graded part P. Throws ShapeError if the shift-0 factor is not
// polynomial (cannot happen for embeddings of DiffOp).
std::pair<EulerPoly, GradedOp> separate(const DiffOp& op);

// Inverse embedding where one exists: each polynomial factor is rewritten in
// the falling-factorial basis, so (R, d) becomes sum_b c_b x^(b+d) d^b.
// Throws ShapeError when a factor is not polynomial or would need b + d < 0.
DiffOp to_diffop(const GradedOp& op);

// Composition: (a * b) means apply b first. Term rule:
// (R1, d1) o (R2, d2) = (R1(D + d2) * R2(D), d1 + d2).
GradedOp compose(const GradedOp& a, const GradedOp& b);

// R(D) o op, with R's argument shifted per term as above.
GradedOp left_compose(const EulerRational& r, const GradedOp& op);

// Exact action through the requested truncation.
XSeries apply_graded(const GradedOp& op, const XSeries& s, long order);

}  // namespace eulerop
