#include "eulerop/families.hpp"

#include "eulerop/errors.hpp"

#include <utility>

namespace eulerop {

namespace {

Rational rat_pow(const Rational& r, long e) {
    Rational out(1);
    for (long i = 0; i < e; ++i) out = out * r;
    return out;
}

Rational sign_pow(long n) { return n % 2 ? Rational(-1) : Rational(1); }

DiffOp poly_of_euler(const EulerPoly& f) {
    DiffOp out;
    DiffOp power = DiffOp::identity();
    for (long k = 0; k <= f.degree(); ++k) {
        out += f.coeff(k) * power;
        power = DiffOp::euler() * power;
    }
    return out;
}

// x(1-x) y'' + [gamma - (alpha+beta+1) x] y' - alpha beta y
DiffOp gauss_op(const Rational& a, const Rational& b, const Rational& g) {
    DiffOp op;
    op.add_term(1, 1, 2);
    op.add_term(-1, 2, 2);
    op.add_term(g, 0, 1);
    op.add_term(-(a + b + Rational(1)), 1, 1);
    op.add_term(-(a * b), 0, 0);
    return op;
}

// x y'' + (gamma - x) y' - alpha y
DiffOp kummer_op(const Rational& a, const Rational& g) {
    DiffOp op;
    op.add_term(1, 1, 2);
    op.add_term(g, 0, 1);
    op.add_term(-1, 1, 1);
    op.add_term(-a, 0, 0);
    return op;
}

// x y'' + (alpha + 1 - x) y' + n y
DiffOp laguerre_op(const Rational& n, const Rational& alpha) {
    DiffOp op;
    op.add_term(1, 1, 2);
    op.add_term(alpha + Rational(1), 0, 1);
    op.add_term(-1, 1, 1);
    op.add_term(n, 0, 0);
    return op;
}

// y'' - 2x y' + 2n y
DiffOp hermite_op(const Rational& n) {
    DiffOp op;
    op.add_term(1, 0, 2);
    op.add_term(-2, 1, 1);
    op.add_term(2 * n, 0, 0);
    return op;
}

// (x^2 - 1) y'' + 3x y' - n(n+2) y
DiffOp chebyshev_op(const Rational& n) {
    DiffOp op;
    op.add_term(1, 2, 2);
    op.add_term(-1, 0, 2);
    op.add_term(3, 1, 1);
    op.add_term(-(n * (n + Rational(2))), 0, 0);
    return op;
}

// D prod(D + b_j - 1) - x prod(D + a_i)
DiffOp pfq_op(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    EulerPoly fa(Rational(1));
    for (const auto& ai : a) fa = fa * EulerPoly::linear(ai);
    EulerPoly fb = EulerPoly::variable();
    for (const auto& bj : b) fb = fb * EulerPoly::linear(bj - Rational(1));
    return poly_of_euler(fb) - DiffOp::x() * poly_of_euler(fa);
}

// x^2 y'' + a x^2 cos(x) y, with cos truncated so every shift that can land
// inside the window is present.
DiffOp periodic_op(const Rational& a, long window) {
    DiffOp op;
    op.add_term(1, 2, 2);
    long limit = window < 2 ? 2 : window;
    for (long j = 0; 2 * j + 2 <= limit; ++j)
        op.add_term(a * sign_pow(j) / Rational(factorial(2 * j)), 2 * j + 2, 0);
    return op;
}

}  // namespace

const Rational& FamilySpec::at(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw UnboundParameterError(name);
    return it->second;
}

FamilyEquation build_equation(const FamilySpec& spec, long window) {
    const bool euler_seeded = spec.variant == SeparationVariant::EulerSeeded;
    DiffOp op;
    std::vector<Rational> seeds;

    switch (spec.family) {
        case Family::HG2F1: {
            Rational a = spec.at("alpha"), b = spec.at("beta"), g = spec.at("gamma");
            if (euler_seeded) {
                op = DiffOp::x() * gauss_op(a, b, g);
                seeds = {0, Rational(1) - g};
            } else {
                op = gauss_op(a, b, g);
                seeds = {-a, -b};
            }
            break;
        }
        case Family::CHG: {
            Rational a = spec.at("alpha"), g = spec.at("gamma");
            if (euler_seeded) {
                op = DiffOp::x() * kummer_op(a, g);
                seeds = {0, Rational(1) - g};
            } else {
                op = kummer_op(a, g);
                seeds = {-a};
            }
            break;
        }
        case Family::PFQ: {
            if (spec.num_params.size() != spec.den_params.size() + 1)
                throw ShapeError("pfq needs one more numerator parameter than denominator");
            if (euler_seeded) {
                op = pfq_op(spec.num_params, spec.den_params);
                seeds.emplace_back(0);
                for (const auto& bj : spec.den_params) seeds.push_back(Rational(1) - bj);
            } else {
                // The same equation multiplied by -1/x.
                GradedOp g;
                EulerPoly fa(Rational(1));
                for (const auto& ai : spec.num_params) fa = fa * EulerPoly::linear(ai);
                EulerPoly fb = EulerPoly::variable();
                for (const auto& bj : spec.den_params) fb = fb * EulerPoly::linear(bj - Rational(1));
                g.add_term(EulerRational(fa), 0);
                g.add_term(EulerRational(-fb), -1);
                op = to_diffop(g);
                for (const auto& ai : spec.num_params) seeds.push_back(-ai);
            }
            break;
        }
        case Family::LAGUERRE: {
            Rational n = spec.at("n"), alpha = spec.at("alpha");
            if (euler_seeded) {
                op = DiffOp::x() * laguerre_op(n, alpha);
                seeds = {0, -alpha};
            } else {
                op = laguerre_op(n, alpha);
                seeds = {n};
            }
            break;
        }
        case Family::HERMITE: {
            Rational n = spec.at("n");
            if (euler_seeded) {
                op = DiffOp::monomial(1, 2, 0) * hermite_op(n);
                seeds = {0, 1};
            } else {
                op = hermite_op(n);
                seeds = {n};
            }
            break;
        }
        case Family::CHEBYSHEV_U: {
            Rational n = spec.at("n");
            if (euler_seeded) {
                op = DiffOp::monomial(1, 2, 0) * chebyshev_op(n);
                seeds = {0, 1};
            } else {
                op = chebyshev_op(n);
                seeds = {n, -n - Rational(2)};
            }
            break;
        }
        case Family::PERIODIC_COS: {
            if (!euler_seeded)
                throw ShapeError("the cosine-potential equation has no descending separation");
            op = periodic_op(spec.at("a"), window);
            seeds = {0, 1};
            break;
        }
    }

    auto [f, p] = separate(op);
    Rational lead = f.leading();
    if (!(lead == Rational(1))) {
        Rational s = Rational(1) / lead;
        op = s * op;
        f = s * f;
        p = s * p;
    }
    return {std::move(op), std::move(f), std::move(p), std::move(seeds)};
}

XSeries hypergeometric_2f1(const Rational& alpha, const Rational& beta, const Rational& gamma,
                           long order, RootChoice root) {
    FamilySpec spec{Family::HG2F1,
                    SeparationVariant::EulerSeeded,
                    {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}},
                    {},
                    {}};
    FamilyEquation eq = build_equation(spec);
    const Rational& lambda = root == RootChoice::First ? eq.seeds[0] : eq.seeds[1];
    return solve_series(eq.diagonal, eq.off_diagonal, lambda, order).solution;
}

XSeries hypergeometric_exp_form(const Rational& alpha, long n, const Rational& gamma, long order) {
    if (n < 0) throw std::domain_error("hypergeometric_exp_form: n must be nonnegative");
    EulerRational j(EulerPoly::variable() * EulerPoly::linear(gamma - Rational(1)),
                    EulerPoly::linear(alpha - Rational(1)));
    XSeries raw = exp_apply(GradedOp(j, -1), Rational(n), order, -1);
    Rational gn = pochhammer(gamma, n);
    if (gn.is_zero()) throw ResonanceError(Rational(1) - gamma);
    return raw.scaled(sign_pow(n) * pochhammer(alpha, n) / gn);
}

XSeries confluent_1f1(const Rational& alpha, const Rational& gamma, long order) {
    FamilySpec spec{Family::CHG,
                    SeparationVariant::EulerSeeded,
                    {{"alpha", alpha}, {"gamma", gamma}},
                    {},
                    {}};
    FamilyEquation eq = build_equation(spec);
    return solve_series(eq.diagonal, eq.off_diagonal, eq.seeds[0], order).solution;
}

XSeries confluent_exp_form(long n, const Rational& gamma, long order) {
    if (n < 0) throw std::domain_error("confluent_exp_form: n must be nonnegative");
    EulerRational a(EulerPoly::variable() * EulerPoly::linear(gamma - Rational(1)));
    XSeries raw = exp_apply(GradedOp(a, -1), Rational(n), order, -1);
    Rational gn = pochhammer(gamma, n);
    if (gn.is_zero()) throw ResonanceError(Rational(1) - gamma);
    return raw.scaled(sign_pow(n) / gn);
}

XSeries pfq(const std::vector<Rational>& num_params, const std::vector<Rational>& den_params,
            long order, std::size_t root_index) {
    FamilySpec spec{Family::PFQ, SeparationVariant::EulerSeeded, {}, num_params, den_params};
    FamilyEquation eq = build_equation(spec);
    if (root_index >= eq.seeds.size()) throw std::domain_error("pfq: root index out of range");
    return solve_series(eq.diagonal, eq.off_diagonal, eq.seeds[root_index], order).solution;
}

XSeries pfq_descending(const std::vector<Rational>& num_params,
                       const std::vector<Rational>& den_params, long order,
                       std::size_t which_num) {
    FamilySpec spec{Family::PFQ, SeparationVariant::DerivativeSeeded, {}, num_params, den_params};
    FamilyEquation eq = build_equation(spec);
    if (which_num >= eq.seeds.size())
        throw std::domain_error("pfq_descending: seed index out of range");
    return solve_series(eq.diagonal, eq.off_diagonal, eq.seeds[which_num], order).solution;
}

LaurentPoly laguerre(long n, const Rational& alpha) {
    if (n < 0) throw std::domain_error("laguerre: n must be nonnegative");
    EulerRational a(EulerPoly::variable() * EulerPoly::linear(alpha));
    XSeries raw = exp_apply(GradedOp(a, -1), Rational(n), n, -1);
    return raw.scaled(sign_pow(n) / Rational(factorial(n))).to_polynomial();
}

LaurentPoly hermite(long n) {
    if (n < 0) throw std::domain_error("hermite: n must be nonnegative");
    EulerRational a(Rational(1, 4) * (EulerPoly::variable() * EulerPoly::linear(-1)));
    XSeries raw = exp_apply(GradedOp(a, -2), Rational(n), n, -1);
    return raw.scaled(rat_pow(2, n)).to_polynomial();
}

LaurentPoly chebyshev_u(long n) {
    if (n < 0) throw std::domain_error("chebyshev_u: n must be nonnegative");
    // At n = 0 the factor's zero from d^2 at mu = 0 cancels against the
    // denominator, but the chain is empty there anyway.
    if (n == 0) return LaurentPoly(Rational(1));
    EulerRational a(EulerPoly::variable() * EulerPoly::linear(-1),
                    Rational(2) * EulerPoly::linear(Rational(n)));
    XSeries raw = exp_apply(GradedOp(a, -2), Rational(n), n, -1);
    return raw.scaled(rat_pow(2, n)).to_polynomial();
}

XSeries periodic_cos(const Rational& a, long lambda, long order) {
    if (lambda != 0 && lambda != 1)
        throw std::domain_error("periodic_cos: lambda must be 0 or 1");
    FamilySpec spec{Family::PERIODIC_COS, SeparationVariant::EulerSeeded, {{"a", a}}, {}, {}};
    FamilyEquation eq = build_equation(spec, order);
    return solve_series(eq.diagonal, eq.off_diagonal, Rational(lambda), order).solution;
}

XSeries periodic_cos_direct(const Rational& a, long lambda, long order) {
    if (lambda != 0 && lambda != 1)
        throw std::domain_error("periodic_cos_direct: lambda must be 0 or 1");
    if (order < 0) throw std::domain_error("periodic_cos_direct: negative order");
    if (a.is_zero()) return XSeries::monomial(Rational(lambda), Direction::Ascending, std::nullopt);

    XSeries out(Rational(lambda), Direction::Ascending, order);
    out.set(0, 1);

    // One raise chain per tuple (n_1..n_m): step k raises the exponent by
    // 2 + 2 n_k, and the factorial ratio for step k is taken at the exponent
    // just below the one the step lands on.
    std::vector<long> tuple;
    auto emit = [&](long m) {
        long total = 0;
        for (long nk : tuple) total += nk;
        Rational coeff = rat_pow(-a, m);
        for (long nk : tuple) coeff = coeff * sign_pow(nk) / Rational(factorial(2 * nk));
        for (long r = 1; r <= m; ++r) {
            long prefix = 0;
            for (long i = 0; i < m + 1 - r; ++i) prefix += tuple[static_cast<std::size_t>(i)];
            long arg = 2 * (m - r + prefix) + lambda;
            coeff = coeff * Rational(factorial(arg)) / Rational(factorial(arg + 2));
        }
        out.add(2 * (m + total), coeff);
    };
    auto enumerate = [&](auto&& self, long depth, long budget) -> void {
        if (depth == 0) {
            emit(static_cast<long>(tuple.size()));
            return;
        }
        for (long nk = 0; nk <= budget; ++nk) {
            tuple.push_back(nk);
            self(self, depth - 1, budget - nk);
            tuple.pop_back();
        }
    };
    for (long m = 1; 2 * m <= order; ++m) enumerate(enumerate, m, (order - 2 * m) / 2);
    return out;
}

LaurentPoly oracle_recurrence(Family family, long n, const Rational& alpha) {
    if (n < 0) throw std::domain_error("oracle_recurrence: n must be nonnegative");
    LaurentPoly x = LaurentPoly::variable();
    LaurentPoly prev, cur;
    switch (family) {
        case Family::LAGUERRE:
            prev = LaurentPoly(Rational(1));
            cur = LaurentPoly(alpha + Rational(1)) - x;
            for (long k = 1; k < n; ++k) {
                LaurentPoly next = (LaurentPoly(Rational(2 * k + 1) + alpha) - x) * cur -
                                   (Rational(k) + alpha) * prev;
                next = Rational(1, k + 1) * next;
                prev = std::move(cur);
                cur = std::move(next);
            }
            break;
        case Family::HERMITE:
            prev = LaurentPoly(Rational(1));
            cur = Rational(2) * x;
            for (long k = 1; k < n; ++k) {
                LaurentPoly next = Rational(2) * (x * cur) - Rational(2 * k) * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            break;
        case Family::CHEBYSHEV_U:
            prev = LaurentPoly(Rational(1));
            cur = Rational(2) * x;
            for (long k = 1; k < n; ++k) {
                LaurentPoly next = Rational(2) * (x * cur) - prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            break;
        default:
            throw std::domain_error("oracle_recurrence: no recurrence for this family");
    }
    return n == 0 ? prev : cur;
}

}  // namespace eulerop
