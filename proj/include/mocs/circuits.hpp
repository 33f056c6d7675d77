#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mocs/problem.hpp"

namespace mocs {

struct Arc {
  std::size_t from = 0;  // vertex index
  std::size_t to = 0;
  double capacity = 1.0;
};

/// Weighted directed graph. Vertices are kept in natural order: integer
/// labels numerically first, then other labels lexicographically. Arcs are
/// kept sorted by (from, to).
class Digraph {
 public:
  Digraph() = default;

  /// Adds an arc, creating its endpoints as needed. Throws InvalidInput on a
  /// duplicate arc or a non-positive capacity. Self-loops are allowed and
  /// form circuits of length one.
  void add_arc(const std::string& from, const std::string& to, double capacity = 1.0);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t vertex_index(std::string_view label) const;
  /// Index into arcs(), or npos when absent.
  std::size_t find_arc(std::size_t from, std::size_t to) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void insert_vertex(const std::string& label);

  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
};

/// Reads `from to capacity` lines (capacity optional, default 1); `#`
/// starts a comment.
Digraph parse_graph(std::string_view text);
Digraph load_graph(const std::string& path);
std::string format_graph(const Digraph& g);

/// A simple directed cycle, rotated to start at its smallest vertex.
struct Circuit {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> arcs;  // arcs[k] goes vertices[k] -> vertices[k+1 mod len]
};

/// Circuits in canonical order (length, then lexicographic by vertex
/// index) with their circulation variable names y1, y2, ...
struct CircuitSet {
  std::vector<Circuit> circuits;
  std::vector<std::string> variable_names;

  std::size_t size() const noexcept { return circuits.size(); }
};

inline constexpr std::size_t kDefaultCircuitCap = 100'000;

/// All simple circuits (Johnson's algorithm). Throws CircuitCapError once
/// more than `cap` circuits are found and InvalidInput on an empty graph.
CircuitSet enumerate_simple_circuits(const Digraph& g, std::size_t cap = kDefaultCircuitCap);

/// How criteria are attached to the circulation variables.
struct CirculationObjectives {
  enum class Kind {
    PerCircuit,  ///< F_i = y_i -> max for every selected circuit
    SumAndCost,  ///< F1 = sum y_i -> max, F2 = sum (i - 1) y_i -> min
  };
  Kind kind = Kind::PerCircuit;
  /// 1-based circuit numbers to use; empty means all circuits.
  std::vector<std::size_t> circuits;
};

/// Circulation problem over `cs`: one variable y_i in [0, min capacity of
/// circuit i], and per arc carried by some circuit a constraint
/// `sum of y_i over circuits through the arc  REL  capacity`. REL is
/// `arc_relation` for arcs shared by two or more circuits and `<=` for arcs
/// on a single circuit. Throws InvalidInput for unknown circuit numbers.
Problem build_circulation_problem(const Digraph& g, const CircuitSet& cs, const CirculationObjectives& objectives,
                                  Relation arc_relation);

/// The three-vertex graph with arcs 1->2, 1->3, 3->1, 2->3, 3->2, unit
/// capacities, used by both worked examples.
Digraph figure2_graph();

/// Per-circuit maximization with `<=` arc constraints.
Problem example1_problem();

/// Sum/cost pair with `=` on shared arcs.
Problem example2_problem();

std::string describe(const Digraph& g, const Circuit& c);

}  // namespace mocs
