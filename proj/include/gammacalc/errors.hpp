#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammacalc {

// Base for all library errors. Subclasses map onto CLI exit code 1
// (domain errors) except SyntaxError, which maps onto exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Gamma evaluated at 0, -1, -2, ...
struct PoleError : Error {
  using Error::Error;
};

// Denominator does not divide 24, 60, or 120 (per operation contract).
struct UnsupportedDenominator : Error {
  using Error::Error;
};

// Argument outside an operation's domain (division by a ball containing
// zero, sqrt of a negative ball, elliptic modulus >= 1, ...).
struct DomainError : Error {
  using Error::Error;
};

// Iteration/level cap reached before the requested tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// Series tail bound exceeds the budget (c-a-b too small).
struct SlowConvergence : Error {
  using Error::Error;
};

// 2F1 at 1 with c-a-b <= 0.
struct DivergentAtOne : Error {
  using Error::Error;
};

// Derivation system failed to determine an unknown (contract: never).
struct SingularSystem : Error {
  using Error::Error;
};

// Exact value is negative and cannot be carried by a positive Monomial.
struct NegativeValue : Error {
  using Error::Error;
};

// Monomial built with a zero or negative rational factor.
struct NonPositiveCoefficient : Error {
  using Error::Error;
};

// Constant name not in the atom table.
struct UnknownAtom : Error {
  using Error::Error;
};

// Expression parse failure; offset is a byte position into the input.
struct SyntaxError : Error {
  std::size_t offset;
  std::string expected;
  SyntaxError(std::size_t off, std::string exp)
      : Error("syntax error at offset " + std::to_string(off) + ", expected " + exp),
        offset(off),
        expected(std::move(exp)) {}
};

}  // namespace gammacalc
