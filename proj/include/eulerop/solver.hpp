#pragma once

// Frobenius-style machinery around the Euler separation L = F(D) + P:
// indicial roots from F, the inverse-operator iteration for series
// solutions, exponential-form solutions for lowering operators, and
// residual verification.

#include "eulerop/euler_poly.hpp"
#include "eulerop/graded_op.hpp"
#include "eulerop/laurent.hpp"
#include "eulerop/xseries.hpp"

#include <vector>

namespace eulerop {

struct IndicialRoot {
    Rational root;
    long multiplicity = 1;
};

struct IndicialResult {
    std::vector<IndicialRoot> roots;   // ascending by root value
    long unresolved_degree = 0;        // degree left after removing rational roots

    bool degenerate() const {
        for (const auto& r : roots)
            if (r.multiplicity > 1) return true;
        return false;
    }
};

// All rational roots of f with multiplicities, found exactly (integer
// content, rational-root candidates, deflation). Requires f nonzero.
IndicialResult indicial_roots(const EulerPoly& f);

enum class SolveMode { Ascending, Descending };

struct SolveReport {
    XSeries solution = XSeries(0, Direction::Ascending, std::nullopt);
    SolveMode mode = SolveMode::Ascending;
    bool terminated = false;
    long iterations = 0;                // largest m with a nonzero iterate
    std::vector<Rational> resonances;   // always empty: resonance is a hard error
};

// y = sum_m (-1)^m [F(D)^{-1} P]^m x^lambda, summed exactly through
// |exponent - lambda| <= order. Requires F(lambda) = 0 and sign-homogeneous
// shifts in P (all positive: ascending; all negative: descending).
SolveReport solve_series(const EulerPoly& f, const GradedOp& p, const Rational& lambda,
                         long order);

// sum_m (sign*A)^m / m! applied to x^lambda for a lowering operator A
// (all shifts strictly negative). Terminates exactly when some iterate
// vanishes; otherwise truncates at the requested depth.
XSeries exp_apply(const GradedOp& a, const Rational& lambda, long order, int sign);

// Same exponential applied to a polynomial; requires actual termination.
LaurentPoly exp_apply(const GradedOp& a, const LaurentPoly& p, int sign);

// L y (or (F + P) y) truncated; every returned coefficient is fully
// determined by the known part of y.
XSeries check_residual(const DiffOp& l, const XSeries& y, long order);
XSeries check_residual(const EulerPoly& f, const GradedOp& p, const XSeries& y, long order);

}  // namespace eulerop
