#pragma once

// Rodriguez formulas and generating functions, each computed by a route
// independent of the family builders: weighted differentiation for the
// Rodriguez side, truncated t-series arithmetic and direct operator
// application for the generating-function side.

#include "eulerop/laurent.hpp"
#include "eulerop/tseries.hpp"

namespace eulerop {

// Symbolic weight factor carried alongside a polynomial; never expanded.
enum class Weight { None, ExpNegX, ExpNegXSquared };

// p(x) times the tagged weight. Differentiation applies the product rule
// exactly, so d/dx stays inside polynomials-with-weight.
struct WeightedPoly {
    LaurentPoly poly;
    Weight weight = Weight::None;

    WeightedPoly derivative() const;
};

// (1/n!) e^x d^n/dx^n (e^{-x} x^n); equals laguerre(n, 0).
LaurentPoly rodriguez_laguerre(long n);

// (-1)^n e^{x^2} d^n/dx^n e^{-x^2}; equals hermite(n).
LaurentPoly rodriguez_hermite(long n);

// The reverse derivation: expands (-1)^n (d - 2x)^n 1 by repeated operator
// application and checks it against the exponential route 2^n e^{-d^2/4} x^n
// before returning.
LaurentPoly expform_from_rodriguez(long n);

// Two series claimed equal, with the t-power of the first differing
// coefficient when they are not (-1 when they are).
struct GfReport {
    TSeries lhs;
    TSeries rhs;
    bool equal = false;
    long first_mismatch = -1;
};

// lhs = sum_n laguerre(n, 0) t^n; rhs = exp[-xt/(1-t)] / (1-t).
GfReport gf_laguerre(long n_t);

// lhs = sum_n chebyshev_u(n) t^n; rhs = 1 / (1 - 2xt + t^2).
GfReport gf_chebyshev(long n_t);

// e^{-B} e^{-xt} with B = x d^2 + d acting on x only, computed by summing
// (-B)^m/m! against the bivariate truncation of e^{-xt}; the sum terminates
// because B lowers x-degree. Coefficients are windowed to x-powers <= n_x.
// max_applications caps m when nonnegative (0 gives e^{-xt} back).
TSeries gf_laguerre_operator(long n_t, long n_x, long max_applications = -1);

}  // namespace eulerop
