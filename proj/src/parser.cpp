#include "eulerop/parser.hpp"

#include "eulerop/errors.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace eulerop {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t offset;
    Rational value;        // Number
    bool plain_integer = false;
    std::string text;      // Ident
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::size_t at) { out.push_back({k, at, Rational(0), false, {}}); };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            std::string num = s.substr(i, j - i);
            bool plain = true;
            std::string den = "1";
            if (j < s.size() && s[j] == '/') {
                if (j + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j + 1])))
                    throw ParseError(j, "expected digits after '/' in rational literal");
                std::size_t k = ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                den = s.substr(k, j - k);
                plain = false;
            }
            Token t{Token::Kind::Number, at, Rational(BigInt(num), BigInt(den)), plain, {}};
            out.push_back(std::move(t));
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            Token t{Token::Kind::Ident, at, Rational(0), false, s.substr(i, j - i)};
            out.push_back(std::move(t));
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Token::Kind::Plus, at); break;
            case '-': push(Token::Kind::Minus, at); break;
            case '*': push(Token::Kind::Star, at); break;
            case '^': push(Token::Kind::Caret, at); break;
            case '(': push(Token::Kind::LParen, at); break;
            case ')': push(Token::Kind::RParen, at); break;
            default:
                throw ParseError(at, std::string("unknown token '") + c + "'");
        }
        ++i;
    }
    push(Token::Kind::End, s.size());
    return out;
}

ExprPtr make(OperatorExpr e) { return std::make_shared<const OperatorExpr>(std::move(e)); }

ExprPtr leaf(OperatorExpr::Kind k) { return make({k, Rational(0), {}, nullptr, nullptr, 0}); }

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::End)
            throw ParseError(peek().offset, "unexpected trailing input");
        return e;
    }

private:
    const Token& peek() const { return t_[pos_]; }
    const Token& take() { return t_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept(Token::Kind::Plus))
                e = make({OperatorExpr::Kind::Add, Rational(0), {}, e, term(), 0});
            else if (accept(Token::Kind::Minus))
                e = make({OperatorExpr::Kind::Sub, Rational(0), {}, e, term(), 0});
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept(Token::Kind::Star))
            e = make({OperatorExpr::Kind::Mul, Rational(0), {}, e, factor(), 0});
        return e;
    }

    ExprPtr factor() {
        if (accept(Token::Kind::Minus))
            return make({OperatorExpr::Kind::Neg, Rational(0), {}, factor(), nullptr, 0});
        ExprPtr base = atom();
        if (!accept(Token::Kind::Caret)) return base;
        const Token& e = peek();
        if (e.kind != Token::Kind::Number || !e.plain_integer)
            throw ParseError(e.offset, "exponent must be a nonnegative integer literal");
        take();
        return make({OperatorExpr::Kind::Pow, Rational(0), {}, base, nullptr, e.value.as_long()});
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number:
                take();
                return make({OperatorExpr::Kind::Number, t.value, {}, nullptr, nullptr, 0});
            case Token::Kind::Ident: {
                take();
                if (t.text == "x") return leaf(OperatorExpr::Kind::X);
                if (t.text == "d") return leaf(OperatorExpr::Kind::Ddx);
                if (t.text == "D") return leaf(OperatorExpr::Kind::Euler);
                return make({OperatorExpr::Kind::Parameter, Rational(0), t.text, nullptr,
                             nullptr, 0});
            }
            case Token::Kind::LParen: {
                take();
                ExprPtr e = expr();
                if (!accept(Token::Kind::RParen))
                    throw ParseError(peek().offset, "expected ')'");
                return e;
            }
            default:
                throw ParseError(t.offset, "expected a rational, identifier, or '('");
        }
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

bool atom_like(const OperatorExpr& e) {
    using K = OperatorExpr::Kind;
    switch (e.kind) {
        case K::Number:
            return !e.value.is_negative();
        case K::Parameter:
        case K::X:
        case K::Ddx:
        case K::Euler:
            return true;
        default:
            return false;
    }
}

}  // namespace

bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    if (a.kind != b.kind) return false;
    using K = OperatorExpr::Kind;
    switch (a.kind) {
        case K::Number:
            return a.value == b.value;
        case K::Parameter:
            return a.name == b.name;
        case K::X:
        case K::Ddx:
        case K::Euler:
            return true;
        case K::Add:
        case K::Sub:
        case K::Mul:
            return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
        case K::Pow:
            return a.exponent == b.exponent && *a.lhs == *b.lhs;
        case K::Neg:
            return *a.lhs == *b.lhs;
    }
    return false;
}

ExprPtr parse_operator(const std::string& text) { return Parser(tokenize(text)).run(); }

std::string pretty_print(const OperatorExpr& e) {
    using K = OperatorExpr::Kind;
    auto grouped = [](const OperatorExpr& inner) {
        return atom_like(inner) || inner.kind == K::Pow || inner.kind == K::Neg
                   ? pretty_print(inner)
                   : "(" + pretty_print(inner) + ")";
    };
    switch (e.kind) {
        case K::Number:
            return e.value.str();
        case K::Parameter:
            return e.name;
        case K::X:
            return "x";
        case K::Ddx:
            return "d";
        case K::Euler:
            return "D";
        case K::Add:
            return "(" + pretty_print(*e.lhs) + " + " + pretty_print(*e.rhs) + ")";
        case K::Sub:
            return "(" + pretty_print(*e.lhs) + " - " + pretty_print(*e.rhs) + ")";
        case K::Mul:
            return "(" + pretty_print(*e.lhs) + " * " + pretty_print(*e.rhs) + ")";
        case K::Pow: {
            const OperatorExpr& b = *e.lhs;
            std::string base = atom_like(b) ? pretty_print(b) : "(" + pretty_print(b) + ")";
            return base + "^" + std::to_string(e.exponent);
        }
        case K::Neg:
            return "-" + grouped(*e.lhs);
    }
    return {};
}

DiffOp lower(const OperatorExpr& e, const Bindings& bindings) {
    using K = OperatorExpr::Kind;
    switch (e.kind) {
        case K::Number:
            return e.value * DiffOp::identity();
        case K::Parameter: {
            auto it = bindings.find(e.name);
            if (it == bindings.end()) throw UnboundParameterError(e.name);
            return it->second * DiffOp::identity();
        }
        case K::X:
            return DiffOp::x();
        case K::Ddx:
            return DiffOp::ddx();
        case K::Euler:
            return DiffOp::euler();
        case K::Add:
            return lower(*e.lhs, bindings) + lower(*e.rhs, bindings);
        case K::Sub:
            return lower(*e.lhs, bindings) - lower(*e.rhs, bindings);
        case K::Mul:
            return lower(*e.lhs, bindings) * lower(*e.rhs, bindings);
        case K::Pow:
            return lower(*e.lhs, bindings).pow(e.exponent);
        case K::Neg:
            return -lower(*e.lhs, bindings);
    }
    return {};
}

}  // namespace eulerop
