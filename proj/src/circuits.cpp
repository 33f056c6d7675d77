#include "mocs/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include "mocs/error.hpp"

namespace mocs {

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

bool natural_less(const std::string& a, const std::string& b) {
  const auto ia = as_integer(a);
  const auto ib = as_integer(b);
  if (ia && ib) return *ia < *ib || (*ia == *ib && a < b);
  if (ia.has_value() != ib.has_value()) return ia.has_value();
  return a < b;
}

// Johnson's circuit search rooted at `start`, restricted to vertices with
// index >= start. Reports each circuit as the vertex sequence from `start`.
class CircuitSearch {
 public:
  CircuitSearch(const std::vector<std::vector<std::size_t>>& adj, std::size_t cap,
                std::vector<std::vector<std::size_t>>& out)
      : adj_(adj), cap_(cap), out_(out), blocked_(adj.size(), false), blocked_by_(adj.size()) {}

  void run(std::size_t start) {
    start_ = start;
    std::fill(blocked_.begin(), blocked_.end(), false);
    for (auto& b : blocked_by_) b.clear();
    stack_.clear();
    circuit(start);
  }

 private:
  void unblock(std::size_t u) {
    blocked_[u] = false;
    while (!blocked_by_[u].empty()) {
      const std::size_t w = blocked_by_[u].back();
      blocked_by_[u].pop_back();
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(std::size_t v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (std::size_t w : adj_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        out_.push_back(stack_);
        if (out_.size() > cap_) throw CircuitCapError(cap_);
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (std::size_t w : adj_[v]) {
        if (w < start_) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>>& out_;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> blocked_by_;
  std::vector<std::size_t> stack_;
  std::size_t start_ = 0;
};

Expr sum_of(const std::vector<Expr>& terms) {
  Expr e = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) e = Expr::binary(Expr::Kind::Add, e, terms[k]);
  return e;
}

}  // namespace

void Digraph::insert_vertex(const std::string& label) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label, natural_less);
  if (it != vertices_.end() && *it == label) return;
  const auto pos = static_cast<std::size_t>(it - vertices_.begin());
  vertices_.insert(it, label);
  for (auto& a : arcs_) {
    if (a.from >= pos) ++a.from;
    if (a.to >= pos) ++a.to;
  }
}

void Digraph::add_arc(const std::string& from, const std::string& to, double capacity) {
  if (!(capacity > 0.0)) throw InvalidInput("arc " + from + "->" + to + ": capacity must be positive");
  insert_vertex(from);
  insert_vertex(to);
  const std::size_t f = vertex_index(from);
  const std::size_t t = vertex_index(to);
  if (find_arc(f, t) != npos) throw InvalidInput("duplicate arc " + from + "->" + to);
  Arc arc{f, t, capacity};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc, [](const Arc& a, const Arc& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  arcs_.insert(it, arc);
}

std::size_t Digraph::vertex_index(std::string_view label) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (vertices_[k] == label) return k;
  }
  throw InvalidInput("unknown vertex '" + std::string(label) + "'");
}

std::size_t Digraph::find_arc(std::size_t from, std::size_t to) const {
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (arcs_[k].from == from && arcs_[k].to == to) return k;
  }
  return npos;
}

Digraph parse_graph(std::string_view text) {
  Digraph g;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t b = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > b) fields.emplace_back(line.substr(b, i - b), b);
    }
    if (fields.empty()) continue;
    auto fail = [number](const std::string& msg, std::size_t column) {
      throw ParseError("line " + std::to_string(number) + ", column " + std::to_string(column + 1) + ": " + msg,
                       column, number);
    };
    if (fields.size() < 2 || fields.size() > 3) fail("expected 'from to [capacity]'", fields.front().second);
    double capacity = 1.0;
    if (fields.size() == 3) {
      const auto [text3, col] = fields[2];
      auto [p, ec] = std::from_chars(text3.data(), text3.data() + text3.size(), capacity);
      if (ec != std::errc{} || p != text3.data() + text3.size()) fail("invalid capacity", col);
    }
    try {
      g.add_arc(std::string(fields[0].first), std::string(fields[1].first), capacity);
    } catch (const InvalidInput& e) {
      fail(e.what(), fields[0].second);
    }
  }
  return g;
}

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.offset(), e.line());
  }
}

std::string format_graph(const Digraph& g) {
  std::ostringstream out;
  for (const auto& a : g.arcs()) {
    out << g.vertices()[a.from] << ' ' << g.vertices()[a.to] << ' ' << format_number(a.capacity) << '\n';
  }
  return out.str();
}

CircuitSet enumerate_simple_circuits(const Digraph& g, std::size_t cap) {
  if (g.vertices().empty()) throw InvalidInput("graph has no vertices");
  const std::size_t n = g.vertices().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& a : g.arcs()) adj[a.from].push_back(a.to);

  std::vector<std::vector<std::size_t>> cycles;
  CircuitSearch search(adj, cap, cycles);
  for (std::size_t s = 0; s < n; ++s) search.run(s);

  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  CircuitSet cs;
  for (auto& vs : cycles) {
    Circuit c;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      c.arcs.push_back(g.find_arc(vs[k], vs[(k + 1) % vs.size()]));
    }
    c.vertices = std::move(vs);
    cs.circuits.push_back(std::move(c));
    cs.variable_names.push_back("y" + std::to_string(cs.circuits.size()));
  }
  return cs;
}

Problem build_circulation_problem(const Digraph& g, const CircuitSet& cs, const CirculationObjectives& criteria,
                                  Relation arc_relation) {
  if (cs.circuits.empty()) throw InvalidInput("graph has no circuits; nothing to circulate");
  std::vector<std::size_t> selected = criteria.circuits;
  if (selected.empty()) {
    for (std::size_t i = 1; i <= cs.size(); ++i) selected.push_back(i);
  }
  for (std::size_t i : selected) {
    if (i == 0 || i > cs.size()) {
      throw InvalidInput("objective references unknown circuit " + std::to_string(i) + " (graph has " +
                         std::to_string(cs.size()) + ")");
    }
  }

  std::vector<VariableDomain> variables;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    double bound = g.arcs()[cs.circuits[i].arcs.front()].capacity;
    for (std::size_t a : cs.circuits[i].arcs) bound = std::min(bound, g.arcs()[a].capacity);
    variables.push_back({cs.variable_names[i], Interval{0.0, bound}});
  }

  auto y = [&cs](std::size_t number) { return Expr::variable(cs.variable_names[number - 1]); };
  std::vector<Objective> objectives;
  if (criteria.kind == CirculationObjectives::Kind::PerCircuit) {
    for (std::size_t i : selected) objectives.push_back({"F" + std::to_string(i), y(i), Direction::Maximize});
  } else {
    std::vector<Expr> flow;
    std::vector<Expr> cost;
    for (std::size_t i : selected) {
      flow.push_back(y(i));
      cost.push_back(Expr::binary(Expr::Kind::Multiply, Expr::constant(static_cast<double>(i - 1)), y(i)));
    }
    objectives.push_back({"F1", sum_of(flow), Direction::Maximize});
    objectives.push_back({"F2", sum_of(cost), Direction::Minimize});
  }

  std::vector<Constraint> constraints;
  for (std::size_t a = 0; a < g.arcs().size(); ++a) {
    std::vector<Expr> carriers;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& arcs = cs.circuits[i].arcs;
      if (std::find(arcs.begin(), arcs.end(), a) != arcs.end()) carriers.push_back(y(i + 1));
    }
    if (carriers.empty()) continue;
    const Relation rel = carriers.size() >= 2 ? arc_relation : Relation::LessEqual;
    constraints.push_back({sum_of(carriers), rel, g.arcs()[a].capacity});
  }
  return Problem(std::move(variables), std::move(objectives), std::move(constraints));
}

Digraph figure2_graph() {
  Digraph g;
  g.add_arc("1", "2");
  g.add_arc("1", "3");
  g.add_arc("3", "1");
  g.add_arc("2", "3");
  g.add_arc("3", "2");
  return g;
}

Problem example1_problem() {
  const Digraph g = figure2_graph();
  return build_circulation_problem(g, enumerate_simple_circuits(g), {}, Relation::LessEqual);
}

Problem example2_problem() {
  const Digraph g = figure2_graph();
  return build_circulation_problem(g, enumerate_simple_circuits(g),
                                   {CirculationObjectives::Kind::SumAndCost, {}}, Relation::Equal);
}

std::string describe(const Digraph& g, const Circuit& c) {
  std::string out;
  for (std::size_t v : c.vertices) out += g.vertices()[v] + " -> ";
  out += g.vertices()[c.vertices.front()];
  return out;
}

}  // namespace mocs
