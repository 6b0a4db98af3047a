#ifndef BCLASS_EXPRESSION_HPP
#define BCLASS_EXPRESSION_HPP

// Univariate expressions in x:
//
//   expr    := term (("+"|"-") term)* ;
//   term    := factor (("*"|"/") factor)* ;
//   factor  := ("-")? power ;
//   power   := atom ("^" signed_rational)? ;
//   atom    := number | "pi" | "x" | ident "(" expr ")" | "(" expr ")" ;
//   ident   := "sin"|"cos"|"exp"|"log"|"sqrt"|"sinc" ;
//
// signed_rational is an integer, optionally negated, or a parenthesized
// p/q such as (1/2) or (-3/2).

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace bclass {

enum class NodeKind { Constant, Pi, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Call };

enum class Builtin { Sin, Cos, Exp, Log, Sqrt, Sinc };

std::string_view builtin_name(Builtin fn);

struct Node {
  NodeKind kind = NodeKind::Constant;
  std::size_t position = 0;  ///< offset of the node's first token in the source
  double value = 0.0;        ///< Constant
  std::string literal;       ///< Constant: source text, used for exact conversion
  Builtin function = Builtin::Sin;
  long exponent_num = 1;     ///< Power: exponent = exponent_num / exponent_den, den > 0, reduced
  long exponent_den = 1;
  std::shared_ptr<const Node> lhs;  ///< unary operand, base, call argument, or left operand
  std::shared_ptr<const Node> rhs;
};

using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression tree; copies share structure.
class Expression {
 public:
  Expression() = default;
  explicit Expression(NodePtr root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  bool empty() const { return root_ == nullptr; }

  /// Replaces every occurrence of x with `replacement`.
  Expression substitute(const Expression& replacement) const;

  // Node factories for building trees programmatically.
  static Expression constant(double value);
  static Expression variable();
  static Expression pi();
  static Expression negate(const Expression& a);
  static Expression binary(NodeKind kind, const Expression& a, const Expression& b);
  static Expression power(const Expression& base, long num, long den = 1);
  static Expression call(Builtin fn, const Expression& arg);

 private:
  NodePtr root_;
};

/// Structural equality; source positions are ignored.
bool operator==(const Expression& a, const Expression& b);

/// Throws ParseError with the offending offset.
Expression parse_expression(std::string_view source);

/// Canonical text form; parse_expression(to_string(e)) == e.
std::string to_string(const Expression& e);

}  // namespace bclass

#endif  // BCLASS_EXPRESSION_HPP
