#pragma once

// Builders for the classical equation families handled by the Euler
// separation L = F(D) + P: Gauss and confluent hypergeometric, generalized
// pFq, Laguerre, Hermite, Chebyshev II, and a cosine-potential equation.
// Each family offers the separated equation itself, series/polynomial
// solutions through the inverse-operator and exponential routes, and
// independent recurrence oracles for cross-checking.

#include "eulerop/diff_op.hpp"
#include "eulerop/euler_poly.hpp"
#include "eulerop/graded_op.hpp"
#include "eulerop/laurent.hpp"
#include "eulerop/solver.hpp"
#include "eulerop/xseries.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace eulerop {

enum class Family { HG2F1, CHG, PFQ, LAGUERRE, HERMITE, CHEBYSHEV_U, PERIODIC_COS };

// EulerSeeded: the operator is pre-multiplied by a power of x so that F is a
// product of D-shifted factors with 0 among its roots (seeds {0, ...}).
// DerivativeSeeded: the operator is used in its natural grading and the
// seeds come from the parameters (descending branches, polynomial cases).
enum class SeparationVariant { EulerSeeded, DerivativeSeeded };

struct FamilySpec {
    Family family;
    SeparationVariant variant = SeparationVariant::EulerSeeded;
    std::map<std::string, Rational> params;        // alpha, beta, gamma, n, a
    std::vector<Rational> num_params, den_params;  // PFQ parameter lists

    const Rational& at(const std::string& name) const;
};

struct FamilyEquation {
    DiffOp op;             // realizes diagonal + off_diagonal, F monic
    EulerPoly diagonal;    // F, with F(seed) = 0 for every seed
    GradedOp off_diagonal; // P
    std::vector<Rational> seeds;
};

// The window matters only for PERIODIC_COS, where the cosine factor is kept
// through every shift that can land inside the window.
FamilyEquation build_equation(const FamilySpec& spec, long window = 0);

enum class RootChoice { First, Second };

// 2F1(alpha, beta; gamma; x) for the first root (0), or the x^(1-gamma)
// branch for the second; both with unit leading coefficient.
XSeries hypergeometric_2f1(const Rational& alpha, const Rational& beta, const Rational& gamma,
                           long order, RootChoice root = RootChoice::First);

// Terminating 2F1(alpha, -n; gamma; x) through the exponential route:
// (-1)^n (alpha)_n / (gamma)_n * exp(-J) x^n with
// J = (1/(D+alpha)) o (x d^2 + gamma d).
XSeries hypergeometric_exp_form(const Rational& alpha, long n, const Rational& gamma, long order);

// 1F1(alpha; gamma; x) with unit constant term.
XSeries confluent_1f1(const Rational& alpha, const Rational& gamma, long order);

// Terminating 1F1(-n; gamma; x) through the exponential route:
// (-1)^n / (gamma)_n * exp(-(x d^2 + gamma d)) x^n.
XSeries confluent_exp_form(long n, const Rational& gamma, long order);

// p+1Fp at the chosen indicial root: index 0 is the root 0 (conventional
// series), index j >= 1 the root 1 - den_params[j-1].
XSeries pfq(const std::vector<Rational>& num_params, const std::vector<Rational>& den_params,
            long order, std::size_t root_index = 0);

// Descending branch of the same equation, seeded at x^(-num_params[which]).
XSeries pfq_descending(const std::vector<Rational>& num_params,
                       const std::vector<Rational>& den_params, long order,
                       std::size_t which_num = 0);

// L_n^(alpha): ((-1)^n / n!) exp(-(x d^2 + (alpha+1) d)) x^n.
LaurentPoly laguerre(long n, const Rational& alpha);

// H_n: 2^n exp(-(1/4) d^2) x^n.
LaurentPoly hermite(long n);

// U_n: 2^n exp(-(1/(2(D+n+2))) o d^2) x^n.
LaurentPoly chebyshev_u(long n);

// Series solution of x^2 y'' + a x^2 cos(x) y = 0 from the root lambda
// (0 or 1), via the separated equation with the cosine truncated to the
// window; exact through the window.
XSeries periodic_cos(const Rational& a, long lambda, long order);

// The same solution assembled coefficient-by-coefficient from the closed
// multi-index sum over raise-step tuples (n_1..n_m), evaluated literally
// through factorial ratios.
XSeries periodic_cos_direct(const Rational& a, long lambda, long order);

// Standard three-term recurrences as an independent check on the operator
// routes; alpha is used by LAGUERRE only.
LaurentPoly oracle_recurrence(Family family, long n, const Rational& alpha = Rational(0));

}  // namespace eulerop
