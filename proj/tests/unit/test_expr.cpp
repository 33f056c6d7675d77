#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mocs/error.hpp"
#include "mocs/expr.hpp"

namespace mocs {
namespace {

TEST(Expr, EvaluatesLinearCostCriterion) {
  const Expr e = parse_expr("0*y1 + 1*y2 + 2*y3");
  EXPECT_EQ(evaluate(e, {{"y1", 0}, {"y2", 1}, {"y3", 0.5}}), 2.0);
}

TEST(Expr, EvaluatesSumOfCirculations) {
  const Expr e = parse_expr("y1 + y2 + y3");
  EXPECT_EQ(evaluate(e, {{"y1", 1}, {"y2", 1}, {"y3", 0}}), 2.0);
}

TEST(Expr, UnaryPlusIsRejectedAtItsOffset) {
  try {
    parse_expr("y1 + + y2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(Expr, RejectsMalformedInput) {
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("(y1 + y2"), ParseError);
  EXPECT_THROW(parse_expr("y1 y2"), ParseError);
  EXPECT_THROW(parse_expr("y1 $ 2"), ParseError);
  EXPECT_THROW(parse_expr("y1 ^ 1.5"), ParseError);
  EXPECT_THROW(parse_expr("y1 ^ -2"), ParseError);
}

TEST(Expr, PrecedenceAndAssociativity) {
  EXPECT_EQ(evaluate(parse_expr("2 + 3 * 4"), {}), 14.0);
  EXPECT_EQ(evaluate(parse_expr("10 - 4 - 3"), {}), 3.0);
  EXPECT_EQ(evaluate(parse_expr("16 / 4 / 2"), {}), 2.0);
  EXPECT_EQ(evaluate(parse_expr("-2 ^ 2"), {}), -4.0);
  EXPECT_EQ(evaluate(parse_expr("(1 + 2) ^ 3"), {}), 27.0);
  EXPECT_EQ(evaluate(parse_expr("x ^ 0"), {{"x", 5}}), 1.0);
}

TEST(Expr, MissingVariableAndDivisionByZero) {
  EXPECT_THROW(evaluate(parse_expr("a + b"), {{"a", 1}}), EvalError);
  EXPECT_THROW(evaluate(parse_expr("1 / (a - a)"), {{"a", 3}}), EvalError);
}

TEST(Expr, FreeVariablesAreSorted) {
  const auto vars = free_variables(parse_expr("z * a + m - a"));
  EXPECT_EQ(std::vector<std::string>(vars.begin(), vars.end()), (std::vector<std::string>{"a", "m", "z"}));
}

TEST(Expr, PrintingIsMinimalAndReparses) {
  EXPECT_EQ(to_string(parse_expr("(a + b) + c")), "a + b + c");
  EXPECT_EQ(to_string(parse_expr("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(to_string(parse_expr("(a * b) / (c * d)")), "a*b/(c*d)");
  EXPECT_EQ(to_string(parse_expr("-(a + b)")), "-(a + b)");
  EXPECT_EQ(to_string(Expr::constant(-2.5)), "-2.5");
  const Expr sub = Expr::binary(Expr::Kind::Subtract, Expr::variable("a"), Expr::constant(-2.5));
  EXPECT_EQ(to_string(sub), "a - (-2.5)");
  EXPECT_EQ(evaluate(parse_expr(to_string(sub)), {{"a", 1}}), 3.5);
}

TEST(Expr, FormatNumberIsShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(std::sqrt(0.5)), "0.7071067811865476");
}

// Printing and reparsing must give bit-identical values on random points.
TEST(Expr, RoundTripOnRandomPoints) {
  const std::vector<std::string> sources = {
      "3*x - 2*y^2 + x*y",          "-(x - y) / (1 + z^2)",      "x^3 - x^2 + x - 1",
      "(x + y) * (y - z) - -z",     "1.25e1 * x / 4 - 0.5*y*z",  "-x^2 + -(-y)",
      "x - (y - (z - (x - y)))",    "x / y / z",                 "x / (y / z)",
  };
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  const std::vector<std::string> names = {"x", "y", "z"};
  for (const auto& src : sources) {
    const Expr e = parse_expr(src);
    const Expr again = parse_expr(to_string(e));
    EXPECT_EQ(to_string(again), to_string(e)) << src;
    const BoundExpr bound(e, names);
    for (int k = 0; k < 100; ++k) {
      const std::vector<double> x = {u(rng), u(rng), u(rng)};
      const Assignment a = {{"x", x[0]}, {"y", x[1]}, {"z", x[2]}};
      const double v = evaluate(e, a);
      EXPECT_EQ(evaluate(again, a), v) << src;
      EXPECT_EQ(bound(x), v) << src;
    }
  }
}

TEST(Expr, BoundExpressionRejectsUnknownVariable) {
  const std::vector<std::string> names = {"x"};
  EXPECT_THROW(BoundExpr(parse_expr("x + w"), names), InvalidInput);
}

}  // namespace
}  // namespace mocs
