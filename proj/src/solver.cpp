#include "eulerop/solver.hpp"

#include "eulerop/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace eulerop {

namespace {

// Divisors of |n|, requiring |n| to fit a machine word (true for every
// cleared indicial polynomial in scope).
std::vector<BigInt> divisors(const BigInt& n) {
    BigInt a = n < 0 ? BigInt(-n) : n;
    if (a > BigInt(std::numeric_limits<long long>::max()))
        throw Error("indicial_roots: coefficient too large for root search");
    long long m = a.convert_to<long long>();
    std::vector<BigInt> r;
    for (long long i = 1; i * i <= m; ++i) {
        if (m % i != 0) continue;
        r.emplace_back(i);
        if (i != m / i) r.emplace_back(m / i);
    }
    return r;
}

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd_big(a, b);
    BigInt r = (a / g) * b;
    return r < 0 ? BigInt(-r) : r;
}

// Exact application of a graded operator to a sparse exponent map.
std::map<Rational, Rational> apply_exact(const GradedOp& op,
                                         const std::map<Rational, Rational>& v) {
    std::map<Rational, Rational> w;
    for (const auto& [e, c] : v) {
        if (c.is_zero()) continue;
        for (const auto& t : op.terms()) w[e + Rational(t.shift)] += t.factor.eval(e) * c;
    }
    std::map<Rational, Rational> nz;
    for (const auto& [e, c] : w)
        if (!c.is_zero()) nz[e] = c;
    return nz;
}

}  // namespace

IndicialResult indicial_roots(const EulerPoly& f) {
    if (f.is_zero()) throw ShapeError("indicial_roots: zero polynomial");

    IndicialResult out;

    // Clear denominators and integer content.
    BigInt denom_lcm = 1;
    for (const auto& c : f.coeffs()) denom_lcm = lcm_big(denom_lcm, c.denominator());
    std::vector<BigInt> ic;
    ic.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) ic.push_back(c.numerator() * (denom_lcm / c.denominator()));
    BigInt content = 0;
    for (const auto& c : ic) content = gcd_big(content, c);
    if (content > 1)
        for (auto& c : ic) c /= content;

    std::vector<Rational> g;
    g.reserve(ic.size());
    for (const auto& c : ic) g.emplace_back(c);

    auto poly_eval = [](const std::vector<Rational>& p, const Rational& x) {
        Rational r = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
        return r;
    };
    auto deflate = [](std::vector<Rational>& p, const Rational& r) {
        // Synthetic division by (D - r); remainder is known to vanish.
        std::vector<Rational> q(p.size() - 1);
        Rational carry = 0;
        for (std::size_t k = p.size(); k-- > 1;) {
            carry = p[k] + carry * r;
            q[k - 1] = carry;
        }
        p = std::move(q);
    };

    // Root zero first: trailing zero coefficients.
    long zero_mult = 0;
    while (g.size() > 1 && g.front().is_zero()) {
        g.erase(g.begin());
        ++zero_mult;
    }
    if (g.size() == 1 && g.front().is_zero()) {
        // f was a monomial c*D^n; fully accounted for by the zero root.
        g = {Rational(1)};
    }
    if (zero_mult > 0) out.roots.push_back({0, zero_mult});

    if (g.size() > 1) {
        BigInt trailing = g.front().numerator();
        BigInt leading = g.back().numerator();
        for (const auto& p : divisors(trailing)) {
            for (const auto& q : divisors(leading)) {
                for (int s : {1, -1}) {
                    if (g.size() <= 1) break;
                    Rational cand(s * p, q);
                    long mult = 0;
                    while (g.size() > 1 && poly_eval(g, cand).is_zero()) {
                        deflate(g, cand);
                        ++mult;
                    }
                    if (mult > 0) out.roots.push_back({cand, mult});
                }
            }
        }
    }

    out.unresolved_degree = static_cast<long>(g.size()) - 1;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const IndicialRoot& a, const IndicialRoot& b) { return a.root < b.root; });
    return out;
}

SolveReport solve_series(const EulerPoly& f, const GradedOp& p, const Rational& lambda,
                         long order) {
    if (order < 0) throw std::domain_error("solve_series: negative order");
    if (f.is_zero()) throw ShapeError("solve_series: F is identically zero");
    if (!f.eval(lambda).is_zero())
        throw ShapeError("solve_series: F(" + lambda.str() + ") != 0, not an indicial root");

    auto shifts = p.shifts();
    bool any_pos = false, any_nonpos = false;
    for (long d : shifts) (d > 0 ? any_pos : any_nonpos) = true;
    if (any_pos && any_nonpos) throw MixedDegreeError();
    bool ascending = shifts.empty() || any_pos;
    if (!ascending)
        for (long d : shifts)
            if (d == 0) throw MixedDegreeError();

    Direction dir = ascending ? Direction::Ascending : Direction::Descending;
    int step = ascending ? 1 : -1;

    std::map<long, Rational> window;  // offset -> coeff
    window[0] = 1;
    std::map<Rational, Rational> v{{lambda, Rational(1)}};

    bool terminated = false;
    bool dropped = false;
    long iterations = 0;
    while (true) {
        std::map<Rational, Rational> w = apply_exact(p, v);
        std::map<Rational, Rational> next;
        for (const auto& [e, c] : w) {
            Rational fe = f.eval(e);
            if (fe.is_zero()) throw ResonanceError(e);
            next[e] = -c / fe;
        }
        if (next.empty()) {
            terminated = true;
            break;
        }
        bool visible = false;
        for (const auto& [e, c] : next) {
            Rational off = (e - lambda) * Rational(step);
            if (off.is_nonnegative_integer() && off <= Rational(order)) {
                window[off.as_long()] += c;
                visible = true;
            } else {
                dropped = true;
            }
        }
        ++iterations;
        if (!visible) break;
        v = std::move(next);
    }

    SolveReport rep;
    rep.mode = ascending ? SolveMode::Ascending : SolveMode::Descending;
    rep.terminated = terminated;
    rep.iterations = terminated ? iterations : iterations - 1;

    bool exact = terminated && !dropped;
    XSeries y(lambda, dir, exact ? std::optional<long>() : std::optional<long>(order));
    for (const auto& [k, c] : window) y.set(k, c);
    rep.solution = std::move(y);
    return rep;
}

XSeries exp_apply(const GradedOp& a, const Rational& lambda, long order, int sign) {
    if (order < 0) throw std::domain_error("exp_apply: negative order");
    if (sign != 1 && sign != -1) throw std::domain_error("exp_apply: sign must be +1 or -1");
    for (long d : a.shifts())
        if (d >= 0) throw ShapeError("exp_apply: operator must strictly lower degree");

    std::map<long, Rational> window;
    window[0] = 1;
    std::map<Rational, Rational> v{{lambda, Rational(1)}};

    bool terminated = false;
    bool dropped = false;
    for (long m = 1;; ++m) {
        std::map<Rational, Rational> w = apply_exact(a, v);
        std::map<Rational, Rational> next;
        Rational scale = Rational(sign) / Rational(m);
        for (const auto& [e, c] : w) next[e] = scale * c;
        if (next.empty()) {
            terminated = true;
            break;
        }
        bool visible = false;
        for (const auto& [e, c] : next) {
            Rational off = (lambda - e);
            if (off.is_nonnegative_integer() && off <= Rational(order)) {
                window[off.as_long()] += c;
                visible = true;
            } else {
                dropped = true;
            }
        }
        if (!visible) break;
        v = std::move(next);
    }

    bool exact = terminated && !dropped;
    XSeries y(lambda, Direction::Descending,
              exact ? std::optional<long>() : std::optional<long>(order));
    for (const auto& [k, c] : window) y.set(k, c);
    return y;
}

LaurentPoly exp_apply(const GradedOp& a, const LaurentPoly& p, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("exp_apply: sign must be +1 or -1");
    for (long d : a.shifts())
        if (d >= 0) throw ShapeError("exp_apply: operator must strictly lower degree");

    std::map<Rational, Rational> v;
    for (const auto& [e, c] : p.coefficients()) v[Rational(e)] = c;
    std::map<Rational, Rational> total = v;

    const long guard = 100000;
    for (long m = 1; m <= guard; ++m) {
        v = apply_exact(a, v);
        if (v.empty()) {
            LaurentPoly out;
            for (const auto& [e, c] : total) {
                if (!e.is_integer()) throw std::domain_error("exp_apply: non-integer exponent");
                out.add_to(e.as_long(), c);
            }
            return out;
        }
        Rational scale = Rational(sign) / Rational(m);
        for (auto& [e, c] : v) c = scale * c;
        for (const auto& [e, c] : v) total[e] += c;
    }
    throw Error("exp_apply: exponential series did not terminate");
}

XSeries check_residual(const DiffOp& l, const XSeries& y, long order) {
    return apply_diffop(l, y, order);
}

XSeries check_residual(const EulerPoly& f, const GradedOp& p, const XSeries& y, long order) {
    GradedOp full = p;
    full.add_term(EulerRational(f), 0);
    return apply_graded(full, y, order);
}

}  // namespace eulerop
