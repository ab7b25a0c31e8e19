#include "eulerop/graded_op.hpp"

#include "eulerop/errors.hpp"

#include <sstream>

namespace eulerop {

std::vector<GradedTerm> GradedOp::terms() const {
    std::vector<GradedTerm> r;
    r.reserve(t_.size());
    for (const auto& [d, f] : t_) r.push_back({f, d});
    return r;
}

const EulerRational* GradedOp::term_at_shift(long shift) const {
    auto it = t_.find(shift);
    return it == t_.end() ? nullptr : &it->second;
}

void GradedOp::add_term(EulerRational factor, long shift) {
    auto it = t_.find(shift);
    EulerRational merged = it == t_.end() ? std::move(factor) : it->second + factor;
    if (merged.is_zero())
        t_.erase(shift);
    else
        t_[shift] = std::move(merged);
}

GradedOp GradedOp::operator-() const {
    GradedOp r;
    for (const auto& [d, f] : t_) r.t_[d] = -f;
    return r;
}

GradedOp& GradedOp::operator+=(const GradedOp& o) {
    for (const auto& [d, f] : o.t_) add_term(f, d);
    return *this;
}

GradedOp& GradedOp::operator-=(const GradedOp& o) {
    for (const auto& [d, f] : o.t_) add_term(-f, d);
    return *this;
}

GradedOp operator*(const Rational& s, const GradedOp& op) {
    GradedOp r;
    if (s.is_zero()) return r;
    for (const auto& [d, f] : op.t_) r.t_[d] = EulerRational(s) * f;
    return r;
}

std::vector<long> GradedOp::shifts() const {
    std::vector<long> r;
    r.reserve(t_.size());
    for (const auto& [d, f] : t_) {
        (void)f;
        r.push_back(d);
    }
    return r;
}

std::string GradedOp::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, f] : t_) {
        if (!first) out << " + ";
        out << "(" << f.str() << "; shift " << d << ")";
        first = false;
    }
    return out.str();
}

GradedOp to_graded(const DiffOp& op) {
    GradedOp r;
    for (const auto& t : op.terms()) {
        EulerPoly ff(Rational(1));
        for (long j = 0; j < t.d_order; ++j) ff = ff * EulerPoly::linear(Rational(-j));
        r.add_term(EulerRational(t.coeff * ff), t.degree());
    }
    return r;
}

std::pair<EulerPoly, GradedOp> separate(const DiffOp& op) {
    GradedOp g = to_graded(op);
    EulerPoly f;
    GradedOp p;
    for (const auto& t : g.terms()) {
        if (t.shift == 0) {
            if (!t.factor.is_polynomial())
                throw ShapeError("separate: shift-0 part is not polynomial");
            f += t.factor.num();
        } else {
            p.add_term(t.factor, t.shift);
        }
    }
    return {f, p};
}

DiffOp to_diffop(const GradedOp& op) {
    DiffOp out;
    for (const auto& t : op.terms()) {
        if (!t.factor.is_polynomial())
            throw ShapeError("to_diffop: factor at shift " + std::to_string(t.shift) +
                             " is not polynomial");
        EulerPoly rem = t.factor.num();
        for (long b = rem.degree(); b >= 0; --b) {
            Rational c = rem.coeff(b);
            if (c.is_zero()) continue;
            if (b + t.shift < 0)
                throw ShapeError("to_diffop: term at shift " + std::to_string(t.shift) +
                                 " would need a negative x power");
            out.add_term(c, b + t.shift, b);
            EulerPoly ff(Rational(1));
            for (long j = 0; j < b; ++j) ff = ff * EulerPoly::linear(Rational(-j));
            rem -= c * ff;
        }
    }
    return out;
}

GradedOp compose(const GradedOp& a, const GradedOp& b) {
    GradedOp r;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            r.add_term(ta.factor.shifted(Rational(tb.shift)) * tb.factor, ta.shift + tb.shift);
    return r;
}

GradedOp left_compose(const EulerRational& r, const GradedOp& op) {
    GradedOp out;
    for (const auto& t : op.terms())
        out.add_term(r.shifted(Rational(t.shift)) * t.factor, t.shift);
    return out;
}

XSeries apply_graded(const GradedOp& op, const XSeries& s, long order) {
    if (order < 0) throw std::domain_error("apply_graded: negative order");
    auto terms = op.terms();

    if (s.terminated()) {
        std::map<Rational, Rational> out;
        for (const auto& [k, v] : s.coefficients()) {
            Rational e = s.exponent_at(k);
            for (const auto& t : terms) out[e + Rational(t.shift)] += t.factor.eval(e) * v;
        }
        std::map<Rational, Rational> nz;
        for (const auto& [e, v] : out)
            if (!v.is_zero()) nz[e] = v;
        if (nz.empty()) return XSeries(0, s.direction(), std::nullopt);
        Rational anchor =
            s.direction() == Direction::Ascending ? nz.begin()->first : nz.rbegin()->first;
        XSeries r(anchor, s.direction(), std::nullopt);
        for (const auto& [e, v] : nz) r.set(((e - anchor) * Rational(r.step())).as_long(), v);
        return r;
    }

    long n = std::min(order, *s.truncation());
    long edge = 0;
    bool have_edge = false;
    for (const auto& t : terms) {
        bool tighter = s.direction() == Direction::Ascending ? t.shift < edge : t.shift > edge;
        if (!have_edge || tighter) edge = t.shift;
        have_edge = true;
    }
    XSeries r(s.base() + Rational(edge), s.direction(), n);
    for (const auto& [k, v] : s.coefficients()) {
        Rational e = s.exponent_at(k);
        for (const auto& t : terms) {
            long off = k + (t.shift - edge) * r.step();
            if (off < 0 || off > n) continue;
            r.add(off, t.factor.eval(e) * v);
        }
    }
    return r;
}

}  // namespace eulerop
