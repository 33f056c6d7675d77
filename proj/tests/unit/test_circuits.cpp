#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mocs/circuits.hpp"
#include "mocs/error.hpp"
#include "mocs/problem_io.hpp"
#include "mocs/scalarize.hpp"
#include "mocs/solver.hpp"
#include "mocs/standards.hpp"
#include "test_oracles.hpp"

namespace mocs {
namespace {

using Cycle = std::vector<std::size_t>;

std::vector<Cycle> vertex_lists(const CircuitSet& cs) {
  std::vector<Cycle> out;
  for (const auto& c : cs.circuits) out.push_back(c.vertices);
  return out;
}

TEST(Digraph, NaturalVertexOrderAndSortedArcs) {
  Digraph g;
  g.add_arc("10", "2");
  g.add_arc("2", "b");
  g.add_arc("a", "10");
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"2", "10", "a", "b"}));
  ASSERT_EQ(g.arcs().size(), 3u);
  EXPECT_EQ(g.arcs()[0].from, 0u);
  EXPECT_NE(g.find_arc(g.vertex_index("a"), g.vertex_index("10")), Digraph::npos);
  EXPECT_EQ(g.find_arc(g.vertex_index("10"), g.vertex_index("a")), Digraph::npos);
}

TEST(Digraph, RejectsDuplicatesAndBadCapacity) {
  Digraph g;
  g.add_arc("1", "2");
  EXPECT_THROW(g.add_arc("1", "2"), InvalidInput);
  EXPECT_THROW(g.add_arc("2", "1", 0), InvalidInput);
  EXPECT_THROW(g.add_arc("2", "1", -1), InvalidInput);
}

TEST(GraphIo, ParseFormatRoundTrip) {
  const Digraph g = parse_graph("# figure\n1 2\n1 3 1\n3 1\n2 3 0.5 # half\n\n3 2\n");
  EXPECT_EQ(g.arcs().size(), 5u);
  EXPECT_EQ(g.arcs()[g.find_arc(1, 2)].capacity, 0.5);
  const Digraph again = parse_graph(format_graph(g));
  EXPECT_EQ(format_graph(again), format_graph(g));
  EXPECT_THROW(parse_graph("1\n"), ParseError);
  EXPECT_THROW(parse_graph("1 2 x\n"), ParseError);
  EXPECT_THROW(parse_graph("1 2 3 4\n"), ParseError);
  EXPECT_THROW(load_graph("/nonexistent/graph.txt"), ParseError);
}

TEST(Circuits, Figure2HasThreeCircuits) {
  const Digraph g = figure2_graph();
  const auto cs = enumerate_simple_circuits(g);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(describe(g, cs.circuits[0]), "1 -> 3 -> 1");
  EXPECT_EQ(describe(g, cs.circuits[1]), "2 -> 3 -> 2");
  EXPECT_EQ(describe(g, cs.circuits[2]), "1 -> 2 -> 3 -> 1");
  EXPECT_EQ(cs.variable_names, (std::vector<std::string>{"y1", "y2", "y3"}));
}

TEST(Circuits, AcyclicAndCompleteGraphs) {
  Digraph path;
  path.add_arc("1", "2");
  EXPECT_EQ(enumerate_simple_circuits(path).size(), 0u);

  Digraph k3;
  for (const char* a : {"1", "2", "3"}) {
    for (const char* b : {"1", "2", "3"}) {
      if (std::string(a) != b) k3.add_arc(a, b);
    }
  }
  const auto cs = enumerate_simple_circuits(k3);
  ASSERT_EQ(cs.size(), 5u);
  EXPECT_EQ(vertex_lists(cs), (std::vector<Cycle>{{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {0, 2, 1}}));
}

TEST(Circuits, SelfLoopIsACircuitOfLengthOne) {
  Digraph g;
  g.add_arc("1", "1");
  g.add_arc("1", "2");
  g.add_arc("2", "1");
  EXPECT_EQ(vertex_lists(enumerate_simple_circuits(g)), (std::vector<Cycle>{{0}, {0, 1}}));
}

TEST(Circuits, CapAndEmptyGraph) {
  EXPECT_THROW(enumerate_simple_circuits(figure2_graph(), 2), CircuitCapError);
  EXPECT_THROW(enumerate_simple_circuits(Digraph{}), InvalidInput);
}

TEST(Circuits, MatchBruteForceOnRandomDigraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = testing_oracles::random_digraph(rng, 6);
    if (g.vertices().empty()) continue;
    EXPECT_EQ(vertex_lists(enumerate_simple_circuits(g)), testing_oracles::brute_force_cycles(g)) << format_graph(g);
  }
}

TEST(Circulation, Example1System) {
  const Problem p = example1_problem();
  EXPECT_EQ(p.variable_names(), (std::vector<std::string>{"y1", "y2", "y3"}));
  ASSERT_EQ(p.num_objectives(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(p.direction(i), Direction::Maximize);
    EXPECT_EQ(to_string(p.objectives()[i].expr), "y" + std::to_string(i + 1));
  }
  std::set<std::string> shared;
  for (const auto& c : p.constraints()) {
    if (to_string(c.lhs).find('+') != std::string::npos) {
      EXPECT_EQ(c.relation, Relation::LessEqual);
      shared.insert(to_string(c.lhs));
    }
  }
  EXPECT_EQ(shared, (std::set<std::string>{"y1 + y3", "y2 + y3"}));
  for (const auto& v : p.variables()) {
    const auto& box = std::get<Interval>(v.kind);
    EXPECT_EQ(box.lower, 0.0);
    EXPECT_EQ(box.upper, 1.0);
  }
}

TEST(Circulation, Example2System) {
  const Problem p = example2_problem();
  ASSERT_EQ(p.num_objectives(), 2u);
  EXPECT_EQ(p.direction(0), Direction::Maximize);
  EXPECT_EQ(p.direction(1), Direction::Minimize);
  EXPECT_EQ(to_string(p.objectives()[0].expr), "y1 + y2 + y3");
  EXPECT_EQ(to_string(p.objectives()[1].expr), "0*y1 + 1*y2 + 2*y3");
  std::size_t equalities = 0;
  for (const auto& c : p.constraints()) equalities += c.relation == Relation::Equal;
  EXPECT_EQ(equalities, 2u);
}

TEST(Circulation, SingleCircuitUsesMinimumCapacity) {
  Digraph g;
  g.add_arc("a", "b", 3);
  g.add_arc("b", "a", 2);
  const auto cs = enumerate_simple_circuits(g);
  const Problem p = build_circulation_problem(g, cs, {}, Relation::Equal);
  ASSERT_EQ(p.variables().size(), 1u);
  EXPECT_EQ(std::get<Interval>(p.variables()[0].kind).upper, 2.0);
  ASSERT_EQ(p.constraints().size(), 2u);
  for (const auto& c : p.constraints()) EXPECT_EQ(c.relation, Relation::LessEqual);
  EXPECT_EQ(p.num_objectives(), 1u);
}

TEST(Circulation, SelectedCircuitsAndUnknownNumbers) {
  const Digraph g = figure2_graph();
  const auto cs = enumerate_simple_circuits(g);
  const Problem p = build_circulation_problem(g, cs, {CirculationObjectives::Kind::PerCircuit, {1, 3}}, Relation::LessEqual);
  ASSERT_EQ(p.num_objectives(), 2u);
  EXPECT_EQ(to_string(p.objectives()[1].expr), "y3");
  EXPECT_THROW(build_circulation_problem(g, cs, {CirculationObjectives::Kind::PerCircuit, {4}}, Relation::LessEqual),
               InvalidInput);
  EXPECT_THROW(build_circulation_problem(g, cs, {CirculationObjectives::Kind::PerCircuit, {0}}, Relation::LessEqual),
               InvalidInput);
}

TEST(Circulation, BuiltProblemsRoundTripThroughFiles) {
  for (const Problem& p : {example1_problem(), example2_problem()}) {
    const Problem q = parse_problem(format_problem(p));
    EXPECT_EQ(format_problem(q), format_problem(p));
    EXPECT_EQ(enumerate_feasible(q, GridOptions{}), enumerate_feasible(p, GridOptions{}));
  }
}

TEST(Circulation, Example1EndToEndFromTheGraph) {
  const Digraph g = figure2_graph();
  const Problem p = build_circulation_problem(g, enumerate_simple_circuits(g), {}, Relation::LessEqual);
  SolveOptions o;
  o.refine_rounds = 2;
  const auto r = solve(p, compute_standards(p, o.grid), {Scalarization::GammaMin, false}, o);
  ASSERT_EQ(r.best_points.size(), 1u);
  EXPECT_EQ(r.best_points[0].values, (std::vector<double>{1, 1, 0}));
}

}  // namespace
}  // namespace mocs
