#pragma once

// Surface syntax for differential operators. The grammar is
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := rational | identifier | 'x' | 'd' | 'D' | '(' expr ')'
// where 'd' is d/dx, 'D' is the Euler operator x d/dx, '*' is operator
// composition (left factor applied last), rational literals are "p" or
// "p/q" without spaces, and any other identifier is a parameter to be bound
// before lowering. Whitespace is insignificant.

#include "eulerop/diff_op.hpp"
#include "eulerop/rational.hpp"

#include <map>
#include <memory>
#include <string>

namespace eulerop {

struct OperatorExpr;
using ExprPtr = std::shared_ptr<const OperatorExpr>;

struct OperatorExpr {
    enum class Kind { Number, Parameter, X, Ddx, Euler, Add, Sub, Mul, Pow, Neg };

    Kind kind;
    Rational value;    // Number
    std::string name;  // Parameter
    ExprPtr lhs, rhs;  // binary nodes; Neg and Pow use lhs only
    long exponent = 0; // Pow
};

bool operator==(const OperatorExpr& a, const OperatorExpr& b);
inline bool operator!=(const OperatorExpr& a, const OperatorExpr& b) { return !(a == b); }

// Throws ParseError with the byte offset of the offending token.
ExprPtr parse_operator(const std::string& text);

// Fully parenthesized rendering; parsing it back yields an equal AST for
// any tree the parser itself produced.
std::string pretty_print(const OperatorExpr& e);

using Bindings = std::map<std::string, Rational>;

// Compositional lowering to a canonical DiffOp; every parameter must be
// bound or UnboundParameterError is thrown.
DiffOp lower(const OperatorExpr& e, const Bindings& bindings);

}  // namespace eulerop
