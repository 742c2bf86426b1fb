#pragma once

// The two input languages:
//   polynomials in n:  integer literals, n, + - * / ^, unary minus, parentheses
//                      (division only by nonzero constants, nonnegative integer powers)
//   constant targets:  integer literals, pi, sqrt(...), + - * / ^ with integer powers
// Errors carry 0-based character offsets.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gcf_forge/numerics.hpp"
#include "gcf_forge/poly.hpp"

namespace gcf_forge {

Polynomial parse_polynomial(std::string_view source);

/// Immutable expression tree; copies share nodes.
class ConstantExpr {
 public:
  enum class Kind { Literal, Pi, Negate, Add, Subtract, Multiply, Divide, Power, Sqrt };

  static ConstantExpr literal(const BigRational& value);
  static ConstantExpr pi();
  static ConstantExpr negate(ConstantExpr operand);
  static ConstantExpr sqrt(ConstantExpr operand);
  static ConstantExpr binary(Kind kind, ConstantExpr lhs, ConstantExpr rhs);
  static ConstantExpr power(ConstantExpr base, long exponent);

  Kind kind() const;
  /// Literal value; only meaningful for Kind::Literal.
  const BigRational& value() const;
  /// Only meaningful for Kind::Power.
  long exponent() const;
  /// Children: one for Negate/Sqrt/Power, two for the binary kinds.
  const ConstantExpr& lhs() const;
  const ConstantExpr& rhs() const;

  /// Minimal-parenthesis text that parses back to the same tree.
  std::string to_string() const;

  friend bool operator==(const ConstantExpr& x, const ConstantExpr& y);

 private:
  struct Node;
  explicit ConstantExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

ConstantExpr parse_const_expr(std::string_view source);

/// Exact value of a tree free of pi and sqrt; nullopt otherwise.
/// Throws DivisionByZero on an exactly-zero divisor.
std::optional<BigRational> exact_value(const ConstantExpr& expr);

/// Relative error within 2^(-precision_bits + 4). Throws DivisionByZero, NegativeSqrt.
PrecisionReal eval_const_expr(const ConstantExpr& expr, mpfr_prec_t precision_bits);

}  // namespace gcf_forge
