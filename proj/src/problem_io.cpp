#include "mocs/problem_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mocs/error.hpp"

namespace mocs {

namespace {

constexpr std::string_view kBlank = " \t\r";

// A slice of the current line plus its column, so errors can point into it.
struct Field {
  std::string_view text;
  std::size_t column = 0;
};

Field trim(Field f) {
  const auto b = f.text.find_first_not_of(kBlank);
  if (b == std::string_view::npos) return {{}, f.column + f.text.size()};
  const auto e = f.text.find_last_not_of(kBlank);
  return {f.text.substr(b, e - b + 1), f.column + b};
}

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t number) : line_(line), number_(number) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t column) const {
    throw ParseError("line " + std::to_string(number_) + ", column " + std::to_string(column + 1) +
                         ": " + msg,
                     column, number_);
  }

  // Splits `f` at the first ':'.
  std::pair<Field, Field> split_colon(Field f, const char* what) const {
    const auto pos = f.text.find(':');
    if (pos == std::string_view::npos) fail(std::string("expected ':' after ") + what, f.column + f.text.size());
    return {trim({f.text.substr(0, pos), f.column}),
            trim({f.text.substr(pos + 1), f.column + pos + 1})};
  }

  double number(Field f) const {
    f = trim(f);
    double v = 0.0;
    const char* end = f.text.data() + f.text.size();
    auto [p, ec] = std::from_chars(f.text.data(), end, v);
    if (f.text.empty() || ec != std::errc{} || p != end) {
      fail("expected a number, got '" + std::string(f.text) + "'", f.column);
    }
    return v;
  }

  std::string identifier(Field f) const {
    f = trim(f);
    bool ok = !f.text.empty() && (std::isalpha(static_cast<unsigned char>(f.text[0])) || f.text[0] == '_');
    for (char c : f.text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) fail("invalid identifier '" + std::string(f.text) + "'", f.column);
    return std::string(f.text);
  }

  Expr expression(Field f) const {
    f = trim(f);
    try {
      return parse_expr(f.text);
    } catch (const ParseError& e) {
      fail(e.what(), f.column + e.offset());
    }
  }

  std::string_view line() const { return line_; }

 private:
  std::string_view line_;
  std::size_t number_;
};

VariableDomain parse_variable(const LineReader& r, Field f) {
  auto [name, rest] = r.split_colon(f, "variable name");
  VariableDomain d;
  d.name = r.identifier(name);
  const auto sp = rest.text.find_first_of(kBlank);
  const std::string_view kind = rest.text.substr(0, sp);
  Field args = trim({sp == std::string_view::npos ? std::string_view{} : rest.text.substr(sp),
                     rest.column + (sp == std::string_view::npos ? rest.text.size() : sp)});
  if (kind == "interval") {
    const auto gap = args.text.find_first_of(kBlank);
    if (gap == std::string_view::npos) r.fail("interval needs a lower and an upper bound", args.column);
    const double lo = r.number({args.text.substr(0, gap), args.column});
    const double hi = r.number({args.text.substr(gap), args.column + gap});
    d.kind = Interval{lo, hi};
  } else if (kind == "set") {
    FiniteSet set;
    std::size_t start = 0;
    while (true) {
      const auto comma = args.text.find(',', start);
      const auto piece = args.text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                  : comma - start);
      set.values.push_back(r.number({piece, args.column + start}));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    d.kind = std::move(set);
  } else {
    r.fail("expected 'interval' or 'set', got '" + std::string(kind) + "'", rest.column);
  }
  return d;
}

Objective parse_objective(const LineReader& r, Field f) {
  auto [name, rest] = r.split_colon(f, "objective name");
  auto [dir, expr] = r.split_colon(rest, "direction");
  Objective o;
  o.name = r.identifier(name);
  if (dir.text == "max") {
    o.direction = Direction::Maximize;
  } else if (dir.text == "min") {
    o.direction = Direction::Minimize;
  } else {
    r.fail("direction must be 'max' or 'min', got '" + std::string(dir.text) + "'", dir.column);
  }
  o.expr = r.expression(expr);
  return o;
}

Constraint parse_constraint(const LineReader& r, Field f) {
  const auto pos = f.text.find_first_of("<>=");
  if (pos == std::string_view::npos) r.fail("expected '<=', '=' or '>='", f.column + f.text.size());
  Constraint c;
  std::size_t width = 1;
  if (f.text[pos] == '=') {
    c.relation = Relation::Equal;
  } else {
    if (pos + 1 >= f.text.size() || f.text[pos + 1] != '=') r.fail("expected '<=' or '>='", f.column + pos);
    c.relation = f.text[pos] == '<' ? Relation::LessEqual : Relation::GreaterEqual;
    width = 2;
  }
  c.lhs = r.expression({f.text.substr(0, pos), f.column});
  c.rhs = r.number({f.text.substr(pos + width), f.column + pos + width});
  return c;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  enum class Section { None, Variables, Objectives, Constraints };
  Section section = Section::None;
  std::vector<VariableDomain> variables;
  std::vector<Objective> objectives;
  std::vector<Constraint> constraints;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const LineReader r(raw, number);
    Field f = trim({raw, 0});
    if (f.text.empty()) continue;

    std::string_view head = f.text;
    if (!head.empty() && head.back() == ':') head.remove_suffix(1);
    if (head == "variables") {
      section = Section::Variables;
      continue;
    }
    if (head == "objectives") {
      section = Section::Objectives;
      continue;
    }
    if (head == "constraints") {
      section = Section::Constraints;
      continue;
    }
    switch (section) {
      case Section::None: r.fail("expected a section header (variables, objectives, constraints)", f.column);
      case Section::Variables: variables.push_back(parse_variable(r, f)); break;
      case Section::Objectives: objectives.push_back(parse_objective(r, f)); break;
      case Section::Constraints: constraints.push_back(parse_constraint(r, f)); break;
    }
  }

  try {
    return Problem(std::move(variables), std::move(objectives), std::move(constraints));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.offset(), e.line());
  }
}

std::string format_problem(const Problem& p) {
  std::ostringstream out;
  out << "variables\n";
  for (const auto& v : p.variables()) {
    out << "  " << v.name << " : ";
    if (const auto* iv = std::get_if<Interval>(&v.kind)) {
      out << "interval " << format_number(iv->lower) << ' ' << format_number(iv->upper);
    } else {
      out << "set ";
      const auto& values = std::get<FiniteSet>(v.kind).values;
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << format_number(values[i]);
    }
    out << '\n';
  }
  out << "objectives\n";
  for (const auto& o : p.objectives()) {
    out << "  " << o.name << " : " << to_string(o.direction) << " : " << to_string(o.expr) << '\n';
  }
  if (!p.constraints().empty()) {
    out << "constraints\n";
    for (const auto& c : p.constraints()) {
      out << "  " << to_string(c.lhs) << ' ' << to_string(c.relation) << ' ' << format_number(c.rhs) << '\n';
    }
  }
  return out.str();
}

}  // namespace mocs
