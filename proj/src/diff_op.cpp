#include "eulerop/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerop {

DiffOp DiffOp::monomial(const Rational& coeff, long x_power, long d_order) {
    DiffOp op;
    op.add_term(coeff, x_power, d_order);
    return op;
}

std::vector<OpTerm> DiffOp::terms() const {
    std::vector<OpTerm> r;
    r.reserve(t_.size());
    for (const auto& [key, v] : t_) r.push_back({v, key.first, key.second});
    return r;
}

Rational DiffOp::coeff(long x_power, long d_order) const {
    auto it = t_.find({x_power, d_order});
    return it == t_.end() ? Rational(0) : it->second;
}

void DiffOp::add_term(const Rational& coeff, long x_power, long d_order) {
    if (x_power < 0 || d_order < 0) throw std::domain_error("DiffOp: negative term exponent");
    auto key = std::make_pair(x_power, d_order);
    Rational v = this->coeff(x_power, d_order) + coeff;
    if (v.is_zero())
        t_.erase(key);
    else
        t_[key] = v;
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [key, v] : t_) r.t_[key] = -v;
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [key, v] : o.t_) add_term(v, key.first, key.second);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    for (const auto& [key, v] : o.t_) add_term(-v, key.first, key.second);
    return *this;
}

DiffOp operator*(const Rational& s, const DiffOp& op) {
    DiffOp r;
    if (s.is_zero()) return r;
    for (const auto& [key, v] : op.t_) r.t_[key] = s * v;
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    // Normal ordering: d^p o x^q = sum_k C(p,k) * ff(q,k) * x^(q-k) d^(p-k).
    DiffOp r;
    for (const auto& [ka, va] : a.t_) {
        for (const auto& [kb, vb] : b.t_) {
            long a1 = ka.first, b1 = ka.second;
            long a2 = kb.first, b2 = kb.second;
            long kmax = b1 < a2 ? b1 : a2;
            for (long k = 0; k <= kmax; ++k) {
                Rational c = va * vb * Rational(binomial(b1, k)) * falling_factorial(a2, k);
                r.add_term(c, a1 + a2 - k, b1 + b2 - k);
            }
        }
    }
    return r;
}

DiffOp DiffOp::pow(long n) const {
    if (n < 0) throw std::domain_error("DiffOp: negative power");
    DiffOp r = identity();
    for (long k = 0; k < n; ++k) r = r * *this;
    return r;
}

std::vector<long> DiffOp::degrees() const {
    std::vector<long> r;
    for (const auto& [key, v] : t_) {
        (void)v;
        long d = key.first - key.second;
        bool seen = false;
        for (long e : r) seen = seen || e == d;
        if (!seen) r.push_back(d);
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::string DiffOp::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, v] : t_) {
        Rational mag = v.is_negative() ? -v : v;
        if (first) {
            if (v.is_negative()) out << "-";
            first = false;
        } else {
            out << (v.is_negative() ? " - " : " + ");
        }
        auto [a, b] = key;
        bool unit = mag == Rational(1) && (a != 0 || b != 0);
        if (!unit) out << mag.str();
        bool star = !unit;
        if (a != 0) {
            if (star) out << "*";
            out << "x";
            if (a != 1) out << "^" << a;
            star = true;
        }
        if (b != 0) {
            if (star) out << "*";
            out << "d";
            if (b != 1) out << "^" << b;
        }
    }
    return out.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

namespace {

XSeries terminated_from_map(const std::map<Rational, Rational>& m, Direction dir) {
    std::map<Rational, Rational> nz;
    for (const auto& [e, v] : m)
        if (!v.is_zero()) nz[e] = v;
    if (nz.empty()) return XSeries(0, dir, std::nullopt);
    Rational anchor = dir == Direction::Ascending ? nz.begin()->first : nz.rbegin()->first;
    XSeries r(anchor, dir, std::nullopt);
    for (const auto& [e, v] : nz) {
        Rational off = (e - anchor) * Rational(r.step());
        r.set(off.as_long(), v);
    }
    return r;
}

}  // namespace

XSeries apply_diffop(const DiffOp& op, const XSeries& s, long order) {
    if (order < 0) throw std::domain_error("apply_diffop: negative order");
    auto terms = op.terms();

    if (s.terminated()) {
        std::map<Rational, Rational> out;
        for (const auto& [k, v] : s.coefficients()) {
            Rational e = s.exponent_at(k);
            for (const auto& t : terms)
                out[e + Rational(t.degree())] += t.coeff * falling_factorial(e, t.d_order) * v;
        }
        return terminated_from_map(out, s.direction());
    }

    long n = std::min(order, *s.truncation());
    long edge = 0;
    bool have_edge = false;
    for (const auto& t : terms) {
        long d = t.degree();
        bool tighter = s.direction() == Direction::Ascending ? d < edge : d > edge;
        if (!have_edge || tighter) edge = d;
        have_edge = true;
    }
    XSeries r(s.base() + Rational(edge), s.direction(), n);
    for (const auto& [k, v] : s.coefficients()) {
        Rational e = s.exponent_at(k);
        for (const auto& t : terms) {
            long off = k + (t.degree() - edge) * r.step();
            if (off < 0 || off > n) continue;
            r.add(off, t.coeff * falling_factorial(e, t.d_order) * v);
        }
    }
    return r;
}

}  // namespace eulerop
