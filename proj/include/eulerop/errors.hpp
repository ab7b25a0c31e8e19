#pragma once

// Domain error hierarchy. Every failure mode the CLI maps to an exit code
// has a distinct type here so callers can react without string matching.

#include "eulerop/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulerop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A rational-function denominator vanished at a reached exponent.
class ResonanceError : public Error {
public:
    explicit ResonanceError(Rational exponent)
        : Error("resonance: denominator vanishes at exponent " + exponent.str()),
          exponent_(std::move(exponent)) {}
    const Rational& exponent() const { return exponent_; }

private:
    Rational exponent_;
};

// The graded part P carries shifts of both signs; no monotone solve order exists.
class MixedDegreeError : public Error {
public:
    MixedDegreeError() : Error("graded part has shifts of both signs") {}
};

// A structural precondition on operator or parameter shape failed.
class ShapeError : public Error {
public:
    using Error::Error;
};

// An indicial root with multiplicity > 1 blocks the requested series.
class DegenerateIndicialError : public Error {
public:
    explicit DegenerateIndicialError(Rational root)
        : Error("degenerate indicial root " + root.str() + " (multiplicity > 1)"),
          root_(std::move(root)) {}
    const Rational& root() const { return root_; }

private:
    Rational root_;
};

// The canonical-conjugate normalization has no consistent rational solution.
class InconsistentConjugateError : public Error {
public:
    using Error::Error;
};

// Operator-expression syntax error; offset is a byte position into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An identifier in an operator expression has no rational binding.
class UnboundParameterError : public Error {
public:
    explicit UnboundParameterError(const std::string& name)
        : Error("unbound parameter '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

}  // namespace eulerop
