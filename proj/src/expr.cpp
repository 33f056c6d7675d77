#include "mocs/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "mocs/error.hpp"

namespace mocs {

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  std::string name;
  unsigned exponent = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

Expr::Expr() : Expr(constant(0.0)) {}

Expr Expr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negate;
  n->a = std::move(operand.node_);
  return Expr(std::move(n));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  if (op != Kind::Add && op != Kind::Subtract && op != Kind::Multiply && op != Kind::Divide) {
    throw InvalidInput("Expr::binary requires an arithmetic operator");
  }
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->exponent = exponent;
  n->a = std::move(base.node_);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
unsigned Expr::exponent() const { return node_->exponent; }
Expr Expr::operand() const { return Expr(node_->a); }
Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        if (i >= s.size() || !is_digit(s[i])) throw ParseError("malformed number", start);
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i >= s.size() || !is_digit(s[i])) throw ParseError("malformed number", start);
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      out.push_back({Tok::Number, start, s.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, start, s.substr(start, i - start)});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unknown token '") + c + "'", start);
    }
    out.push_back({kind, start, s.substr(start, 1)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail("unexpected token '" + std::string(peek().text) + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error: " + msg, peek().offset);
  }

  Expr expr() {
    Expr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto op = next().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Subtract;
      e = Expr::binary(op, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const auto op = next().kind == Tok::Star ? Expr::Kind::Multiply : Expr::Kind::Divide;
      e = Expr::binary(op, std::move(e), unary());
    }
    return e;
  }

  Expr unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return Expr::negate(unary());
    }
    return power();
  }

  Expr power() {
    Expr e = primary();
    while (peek().kind == Tok::Caret) {
      next();
      const Token& t = peek();
      if (t.kind != Tok::Number) fail("exponent must be a non-negative integer literal");
      unsigned n = 0;
      const auto* end = t.text.data() + t.text.size();
      auto [p, ec] = std::from_chars(t.text.data(), end, n);
      if (ec != std::errc{} || p != end) fail("exponent must be a non-negative integer literal");
      next();
      e = Expr::power(std::move(e), n);
    }
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        double v = 0.0;
        const auto* end = t.text.data() + t.text.size();
        auto [p, ec] = std::from_chars(t.text.data(), end, v);
        if (ec != std::errc{} || p != end) fail("number out of range");
        next();
        return Expr::constant(v);
      }
      case Tok::Ident:
        next();
        return Expr::variable(std::string(t.text));
      case Tok::LParen: {
        next();
        Expr e = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return e;
      }
      case Tok::End:
        fail("unexpected end of expression");
      default:
        fail("unexpected token '" + std::string(t.text) + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

double repeated_product(double base, unsigned n) {
  if (n == 0) return 1.0;
  double r = base;
  for (unsigned i = 1; i < n; ++i) r = r * base;
  return r;
}

double checked_divide(double num, double den) {
  if (den == 0.0) throw EvalError("division by zero");
  return num / den;
}

void collect(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::Constant: return;
    case Expr::Kind::Variable: out.insert(e.name()); return;
    case Expr::Kind::Negate:
    case Expr::Kind::Power: collect(e.operand(), out); return;
    default:
      collect(e.lhs(), out);
      collect(e.rhs(), out);
  }
}

// Binding strength used when deciding where parentheses are needed.
int level(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Subtract: return 1;
    case Expr::Kind::Multiply:
    case Expr::Kind::Divide: return 2;
    case Expr::Kind::Negate: return 3;
    case Expr::Kind::Power: return 4;
    case Expr::Kind::Constant: return std::signbit(e.value()) ? 0 : 5;
    case Expr::Kind::Variable: return 5;
  }
  return 0;
}

void render(const Expr& e, std::string& out);

void render_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(e, out);
  if (wrap) out += ')';
}

void render(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      if (std::signbit(e.value())) {
        out += '-';
        out += format_number(-e.value());
      } else {
        out += format_number(e.value());
      }
      return;
    case Expr::Kind::Variable: out += e.name(); return;
    case Expr::Kind::Negate:
      out += '-';
      render_wrapped(e.operand(), level(e.operand()) < 3, out);
      return;
    case Expr::Kind::Power:
      render_wrapped(e.operand(), level(e.operand()) < 4, out);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    default: {
      const int l = level(e);
      render_wrapped(e.lhs(), level(e.lhs()) < l, out);
      switch (e.kind()) {
        case Expr::Kind::Add: out += " + "; break;
        case Expr::Kind::Subtract: out += " - "; break;
        case Expr::Kind::Multiply: out += '*'; break;
        default: out += '/'; break;
      }
      render_wrapped(e.rhs(), level(e.rhs()) <= l, out);
    }
  }
}

}  // namespace

Expr parse_expr(std::string_view source) {
  if (source.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError("syntax error: empty expression", 0);
  }
  return Parser(tokenize(source)).parse_all();
}

double evaluate(const Expr& e, const Assignment& point) {
  switch (e.kind()) {
    case Expr::Kind::Constant: return e.value();
    case Expr::Kind::Variable: {
      auto it = point.find(e.name());
      if (it == point.end()) throw EvalError("missing value for variable '" + e.name() + "'");
      return it->second;
    }
    case Expr::Kind::Negate: return -evaluate(e.operand(), point);
    case Expr::Kind::Power: return repeated_product(evaluate(e.operand(), point), e.exponent());
    case Expr::Kind::Add: {
      const double a = evaluate(e.lhs(), point);
      return a + evaluate(e.rhs(), point);
    }
    case Expr::Kind::Subtract: {
      const double a = evaluate(e.lhs(), point);
      return a - evaluate(e.rhs(), point);
    }
    case Expr::Kind::Multiply: {
      const double a = evaluate(e.lhs(), point);
      return a * evaluate(e.rhs(), point);
    }
    case Expr::Kind::Divide: {
      const double a = evaluate(e.lhs(), point);
      return checked_divide(a, evaluate(e.rhs(), point));
    }
  }
  return 0.0;
}

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

std::string to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

BoundExpr::BoundExpr(const Expr& e, std::span<const std::string> variables) {
  emit(e, variables, 1);
}

void BoundExpr::emit(const Expr& e, std::span<const std::string> variables, std::size_t depth) {
  max_depth_ = std::max(max_depth_, depth);
  switch (e.kind()) {
    case Expr::Kind::Constant:
      code_.push_back({Op::Push, 0, e.value()});
      return;
    case Expr::Kind::Variable: {
      auto it = std::find(variables.begin(), variables.end(), e.name());
      if (it == variables.end()) throw InvalidInput("unknown variable '" + e.name() + "'");
      code_.push_back({Op::Load, static_cast<unsigned>(it - variables.begin())});
      return;
    }
    case Expr::Kind::Negate:
      emit(e.operand(), variables, depth);
      code_.push_back({Op::Neg});
      return;
    case Expr::Kind::Power:
      emit(e.operand(), variables, depth);
      code_.push_back({Op::Pow, e.exponent()});
      return;
    default:
      emit(e.lhs(), variables, depth);
      emit(e.rhs(), variables, depth + 1);
      switch (e.kind()) {
        case Expr::Kind::Add: code_.push_back({Op::Add}); break;
        case Expr::Kind::Subtract: code_.push_back({Op::Sub}); break;
        case Expr::Kind::Multiply: code_.push_back({Op::Mul}); break;
        default: code_.push_back({Op::Div}); break;
      }
  }
}

double BoundExpr::operator()(std::span<const double> values) const {
  constexpr std::size_t kInline = 32;
  std::array<double, kInline> small{};
  std::vector<double> large;
  double* stack = small.data();
  if (max_depth_ > kInline) {
    large.resize(max_depth_);
    stack = large.data();
  }
  std::size_t top = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Push: stack[top++] = in.value; break;
      case Op::Load: stack[top++] = values[in.arg]; break;
      case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
      case Op::Pow: stack[top - 1] = repeated_product(stack[top - 1], in.arg); break;
      case Op::Add: --top; stack[top - 1] = stack[top - 1] + stack[top]; break;
      case Op::Sub: --top; stack[top - 1] = stack[top - 1] - stack[top]; break;
      case Op::Mul: --top; stack[top - 1] = stack[top - 1] * stack[top]; break;
      case Op::Div: --top; stack[top - 1] = checked_divide(stack[top - 1], stack[top]); break;
    }
  }
  return top == 0 ? 0.0 : stack[0];
}

}  // namespace mocs
