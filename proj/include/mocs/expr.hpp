#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mocs {

/// Immutable arithmetic expression tree.
///
/// Grammar (precedence high to low, binary levels left-associative):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' INTEGER)*
///     primary := NUMBER | IDENT | '(' expr ')'
///
/// Powers take a non-negative integer literal and evaluate by repeated
/// multiplication, so `-x^2` is `-(x^2)`.
class Expr {
 public:
  enum class Kind { Constant, Variable, Negate, Add, Subtract, Multiply, Divide, Power };

  /// The constant 0.
  Expr();

  static Expr constant(double value);
  static Expr variable(std::string name);
  static Expr negate(Expr operand);
  static Expr binary(Kind op, Expr lhs, Expr rhs);
  static Expr power(Expr base, unsigned exponent);

  Kind kind() const noexcept;
  double value() const;               // Constant
  const std::string& name() const;    // Variable
  unsigned exponent() const;          // Power
  Expr operand() const;               // Negate, Power (the base)
  Expr lhs() const;                   // binary ops
  Expr rhs() const;                   // binary ops

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, double, std::less<>>;

/// Parses `source`; throws ParseError carrying the offending offset.
Expr parse_expr(std::string_view source);

/// Throws EvalError on a missing variable or a zero divisor.
double evaluate(const Expr& e, const Assignment& point);

std::set<std::string> free_variables(const Expr& e);

/// Minimal-parenthesis rendering that reparses to the same tree.
std::string to_string(const Expr& e);

/// Shortest decimal text that reads back to exactly `v`.
std::string format_number(double v);

/// Expression compiled against a fixed variable ordering. Performs the same
/// floating-point operations in the same order as `evaluate`, so both routes
/// agree bit for bit.
class BoundExpr {
 public:
  BoundExpr() = default;
  /// Throws InvalidInput if `e` references a name absent from `variables`.
  BoundExpr(const Expr& e, std::span<const std::string> variables);

  double operator()(std::span<const double> values) const;

 private:
  enum class Op : unsigned char { Push, Load, Neg, Add, Sub, Mul, Div, Pow };
  struct Instr {
    Op op;
    unsigned arg = 0;
    double value = 0.0;
  };
  void emit(const Expr& e, std::span<const std::string> variables, std::size_t depth);

  std::vector<Instr> code_;
  std::size_t max_depth_ = 0;
};

}  // namespace mocs
