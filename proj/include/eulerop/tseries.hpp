#pragma once

// Truncated formal power series in an auxiliary variable t, with Laurent
// polynomial (in x) coefficients. Everything is exact through the stored
// order; there is no notion of convergence.

#include "eulerop/laurent.hpp"

#include <string>
#include <vector>

namespace eulerop {

class TSeries {
public:
    explicit TSeries(long order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::domain_error("TSeries: negative order");
    }

    static TSeries constant(const LaurentPoly& p, long order) {
        TSeries s(order);
        s.c_[0] = p;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const LaurentPoly& coeff(long m) const { return c_.at(static_cast<std::size_t>(m)); }
    void set(long m, LaurentPoly p) { c_.at(static_cast<std::size_t>(m)) = std::move(p); }

    bool is_zero() const;

    TSeries operator-() const;
    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);  // truncated Cauchy product
    friend TSeries operator*(const LaurentPoly& p, const TSeries& s);

    friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    std::vector<LaurentPoly> c_;
};

// Multiplicative inverse through the stored order. Requires the t^0
// coefficient to be a nonzero constant polynomial.
TSeries tseries_inv(const TSeries& s);

// Exponential series sum_m s^m / m! through the stored order. Requires the
// t^0 coefficient to be zero.
TSeries tseries_exp(const TSeries& s);

}  // namespace eulerop
