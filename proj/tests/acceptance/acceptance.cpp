// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mocs/circuits.hpp"
#include "mocs/pareto.hpp"
#include "mocs/random_problem.hpp"
#include "mocs/solver.hpp"
#include "mocs/standards.hpp"
#include "test_oracles.hpp"

#ifndef MOCS_CLI_PATH
#error "MOCS_CLI_PATH must name the command-line binary"
#endif

namespace {

using namespace mocs;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kCorpusSize = 200;
constexpr std::uint64_t kCorpusSeed = 20240601;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

std::string tuple(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + format_number(v[k]);
  return s + ")";
}

SolveOptions options(int resolution, int refine) {
  SolveOptions o;
  o.grid.resolution = resolution;
  o.refine_rounds = refine;
  return o;
}

// The shared random corpus with its sampled grids and standards.
struct Instance {
  Problem problem;
  FeasibleSet set;
  ComparisonStandards standards;
};

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    for (Problem& p : random_corpus(kCorpusSeed, kCorpusSize)) {
      FeasibleSet set = sample_feasible(p, GridOptions{});
      ComparisonStandards s = compute_standards(p, set, kDefaultFeasibilityTol);
      out.push_back({std::move(p), std::move(set), std::move(s)});
    }
    return out;
  }();
  return instances;
}

// Every reported point must be non-dominated by any feasible grid point.
void require_certified(Verdict& v, const Instance& in, const SolveReport& r, const std::string& label) {
  v.require(!r.best_points.empty(), label + ": no optimum reported");
  for (std::size_t k = 0; k < r.best_points.size(); ++k) {
    v.require(is_non_dominated_in(in.problem, r.objective_vectors[k], in.set),
              label + ": " + tuple(r.best_points[k].values) + " is dominated");
  }
}

Verdict example1_gamma() {
  Verdict v;
  const Digraph g = figure2_graph();
  const Problem p = build_circulation_problem(g, enumerate_simple_circuits(g), {}, Relation::LessEqual);
  const SolveOptions o = options(10, 2);
  const auto r = solve(p, compute_standards(p, o.grid), {Scalarization::GammaMin, false}, o);
  v.require(r.best_points.size() == 1, "expected a unique optimum, got " + std::to_string(r.best_points.size()));
  v.require(!r.best_points.empty() && r.best_points[0].values == std::vector<double>{1, 1, 0},
            "optimum " + (r.best_points.empty() ? std::string("none") : tuple(r.best_points[0].values)));
  if (v.ok) v.detail = "y = (1, 1, 0), gamma = " + format_number(r.best_value);
  return v;
}

Verdict example1_delta() {
  Verdict v;
  const Problem p = example1_problem();
  const SolveOptions o = options(2, 0);
  const auto r = solve(p, compute_standards(p, o.grid), {Scalarization::DeltaMin, false}, o);
  v.require(r.best_points.size() == 1 && r.best_points[0].values == std::vector<double>{0.5, 0.5, 0.5},
            "optimum " + (r.best_points.empty() ? std::string("none") : tuple(r.best_points[0].values)));
  if (v.ok) v.detail = "y = (0.5, 0.5, 0.5) at resolution 2, delta = " + format_number(r.best_value);
  return v;
}

Verdict example2() {
  Verdict v;
  const Problem p = example2_problem();
  const SolveOptions o = options(10, 2);
  const auto s = compute_standards(p, o.grid);
  v.require(s.ideal.values == std::vector<double>{2, 1}, "K = " + tuple(s.ideal.values));
  v.require(s.anti_ideal.values == std::vector<double>{1, 2}, "W = " + tuple(s.anti_ideal.values));
  const auto r = solve_normalized(p, s, {Scalarization::GammaMin, false}, o);
  v.require(r.best_points.size() == 1 && r.best_points[0].values == std::vector<double>{1, 1, 0},
            "optimum " + (r.best_points.empty() ? std::string("none") : tuple(r.best_points[0].values)));
  v.require(!r.objective_vectors.empty() && r.objective_vectors[0].values == std::vector<double>{2, 1},
            "criteria " + (r.objective_vectors.empty() ? std::string("none") : tuple(r.objective_vectors[0].values)));
  if (v.ok) v.detail = "K = (2, 1), W = (1, 2), y = (1, 1, 0), F = (2, 1)";
  return v;
}

Verdict corpus_shape(Verdict v) {
  std::size_t mixed = 0;
  std::size_t largest = 0;
  for (const auto& in : corpus()) {
    bool has_max = false;
    bool has_min = false;
    for (std::size_t i = 0; i < in.problem.num_objectives(); ++i) {
      (in.problem.direction(i) == Direction::Maximize ? has_max : has_min) = true;
    }
    mixed += has_max && has_min;
    largest = std::max(largest, in.set.size());
    v.require(in.problem.num_objectives() >= 2 && in.problem.num_objectives() <= 4, "objective count out of range");
  }
  v.require(largest <= 2000, "a problem has more than 2000 feasible points");
  v.require(mixed > 0, "no problem mixes max and min criteria");
  return v;
}

Verdict theorems_1_2_4() {
  Verdict v;
  std::size_t checked = 0;
  const SolveOptions o = options(10, 0);
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& in = corpus()[k];
    for (auto m : {Scalarization::DeltaMin, Scalarization::ThetaMax, Scalarization::GammaMin}) {
      const auto r = solve(in.problem, in.standards, {m, false}, o);
      require_certified(v, in, r, "problem " + std::to_string(k + 1) + " " + to_string(m));
      checked += r.best_points.size();
    }
  }
  v = corpus_shape(v);
  if (v.ok) v.detail = std::to_string(corpus().size()) + " problems, " + std::to_string(checked) + " optima certified";
  return v;
}

Verdict theorem_3() {
  Verdict v;
  std::size_t checked = 0;
  const SolveOptions o = options(10, 0);
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& in = corpus()[k];
    for (auto order : {LexOrder::DeltaThenTheta, LexOrder::ThetaThenDelta}) {
      const auto r = solve_lexicographic(in.problem, in.standards, order, o);
      require_certified(v, in, r, "problem " + std::to_string(k + 1) + " " + to_string(order));
      checked += r.best_points.size();
    }
  }
  if (v.ok) v.detail = "both orders, " + std::to_string(checked) + " optima certified";
  return v;
}

Verdict theorem_5() {
  Verdict v;
  const GridOptions g;
  std::size_t cases = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& in = corpus()[k];
    v.require(verify_theorem5(in.problem, in.standards, g), "problem " + std::to_string(k + 1));
    ++cases;
  }
  const Problem e2 = example2_problem();
  v.require(verify_theorem5(e2, compute_standards(e2, g), g), "example 2");
  ++cases;
  if (v.ok) v.detail = std::to_string(cases) + " instances including example 2";
  return v;
}

Verdict root_free() {
  Verdict v;
  const SolveOptions o = options(10, 0);
  std::size_t cases = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& in = corpus()[k];
    for (auto m : {Scalarization::DeltaMin, Scalarization::ThetaMax, Scalarization::GammaMin}) {
      const auto rooted = solve(in.problem, in.standards, {m, false}, o);
      const auto squared = solve(in.problem, in.standards, {m, true}, o);
      v.require(rooted.best_points == squared.best_points, "problem " + std::to_string(k + 1) + " " + to_string(m));
      ++cases;
    }
  }
  if (v.ok) v.detail = std::to_string(cases) + " solves agree";
  return v;
}

Verdict circuits() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::size_t graphs = 0;
  std::size_t cycles = 0;
  while (graphs < 150) {
    const Digraph g = testing_oracles::random_digraph(rng, 6);
    if (g.vertices().empty()) continue;
    ++graphs;
    std::vector<std::vector<std::size_t>> got;
    for (const auto& c : enumerate_simple_circuits(g).circuits) got.push_back(c.vertices);
    const auto expected = testing_oracles::brute_force_cycles(g);
    v.require(got == expected, "graph " + std::to_string(graphs) + ":\n" + format_graph(g));
    cycles += expected.size();
  }
  const auto fig = enumerate_simple_circuits(figure2_graph());
  v.require(fig.size() == 3, "figure 2 graph gave " + std::to_string(fig.size()) + " circuits");
  if (v.ok) v.detail = std::to_string(graphs) + " random digraphs (" + std::to_string(cycles) + " cycles), figure 2 has 3";
  return v;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

Verdict determinism() {
  Verdict v;
  const std::string cli = MOCS_CLI_PATH;
  const std::vector<std::string> runs = {
      "solve example1 --kind gamma --refine 3",
      "solve example2 --normalized --certify --resolution 40",
      "front example1 --resolution 8",
      "verify example2 --random 30 --seed 5",
      "solve example1 --lex theta-delta --resolution 12",
  };
  for (const auto& args : runs) {
    for (const std::string mode : {"--single-threaded", "--threads 8"}) {
      const std::string cmd = "\"" + cli + "\" " + args + " " + mode + " --format json";
      const std::string first = capture(cmd);
      const std::string second = capture(cmd);
      v.require(first.find("\"schema\"") != std::string::npos, args + " " + mode + ": no report");
      v.require(first == second, args + " " + mode + ": reports differ");
    }
    const std::string serial = capture("\"" + cli + "\" " + args + " --single-threaded --format json");
    const std::string parallel = capture("\"" + cli + "\" " + args + " --threads 8 --format json");
    v.require(serial == parallel, args + ": serial and parallel reports differ");
  }
  if (v.ok) v.detail = std::to_string(runs.size()) + " invocations, byte-identical in both modes";
  return v;
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "example 1 gamma reproduction", 1.0, example1_gamma},
      {2, "example 1 delta reproduction", 1.0, example1_delta},
      {3, "example 2 standards and normalized gamma", 1.0, example2},
      {4, "delta/theta/gamma optima are Pareto-optimal", 60.0, theorems_1_2_4},
      {5, "lexicographic optima are Pareto-optimal", 60.0, theorem_3},
      {6, "normalization preserves the Pareto set", 60.0, theorem_5},
      {7, "squared forms select the same points", 60.0, root_free},
      {8, "circuit enumeration matches brute force", 60.0, circuits},
      {9, "CLI reports are deterministic", 60.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (v.ok && seconds > c.budget_seconds) {
      v.ok = false;
      v.detail = "took longer than " + format_number(c.budget_seconds) + " s";
    }
    failures += !v.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (v.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << seconds << " s] "
         << v.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
