#pragma once

// Deterministic generators for property tests.

#include "eulerop/diff_op.hpp"
#include "eulerop/laurent.hpp"
#include "eulerop/rational.hpp"

#include <cstdint>

namespace testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    eulerop::Rational rational(long max_num = 9, long max_den = 5) {
        long num = range(-max_num, max_num);
        long den = range(1, max_den);
        return eulerop::Rational(num, den);
    }

    eulerop::Rational nonzero_rational(long max_num = 9, long max_den = 5) {
        for (;;) {
            auto r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    eulerop::LaurentPoly laurent(long terms, long min_exp, long max_exp) {
        eulerop::LaurentPoly p;
        for (long i = 0; i < terms; ++i) p.add_to(range(min_exp, max_exp), rational());
        return p;
    }

    eulerop::DiffOp diff_op(long terms, long max_x, long max_d) {
        eulerop::DiffOp op;
        for (long i = 0; i < terms; ++i)
            op.add_term(rational(), range(0, max_x), range(0, max_d));
        return op;
    }

private:
    std::uint64_t s_;
};

}  // namespace testutil
