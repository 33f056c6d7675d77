#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mocs/circuits.hpp"
#include "mocs/error.hpp"
#include "mocs/pareto.hpp"
#include "mocs/problem_io.hpp"
#include "mocs/random_problem.hpp"
#include "mocs/scalarize.hpp"
#include "mocs/solver.hpp"
#include "mocs/standards.hpp"
#include "mocs/theorems.hpp"

namespace py = pybind11;
using namespace mocs;

namespace {

GridOptions grid(int resolution, unsigned workers) {
  GridOptions g;
  g.resolution = resolution;
  g.workers = workers;
  return g;
}

Scalarization scalarization_of(const std::string& kind) {
  if (kind == "delta") return Scalarization::DeltaMin;
  if (kind == "theta") return Scalarization::ThetaMax;
  if (kind == "gamma") return Scalarization::GammaMin;
  throw InvalidInput("unknown scalarization '" + kind + "' (expected delta, theta or gamma)");
}

LexOrder lex_of(const std::string& order) {
  if (order == "delta-theta") return LexOrder::DeltaThenTheta;
  if (order == "theta-delta") return LexOrder::ThetaThenDelta;
  throw InvalidInput("unknown lexicographic order '" + order + "'");
}

ComparisonStandards standards_with(const Problem& p, const GridOptions& g,
                                   const std::optional<std::vector<double>>& ideal,
                                   const std::optional<std::vector<double>>& anti_ideal) {
  ComparisonStandards s = compute_standards(p, g);
  if (ideal || anti_ideal) {
    s = override_standards(s, ideal ? std::optional(ObjectiveVector{*ideal}) : std::nullopt,
                           anti_ideal ? std::optional(ObjectiveVector{*anti_ideal}) : std::nullopt);
  }
  return s;
}

std::vector<std::vector<double>> rows(const std::vector<Point>& pts) {
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) out.push_back(p.values);
  return out;
}

std::vector<std::vector<double>> rows(const std::vector<ObjectiveVector>& vs) {
  std::vector<std::vector<double>> out;
  for (const auto& v : vs) out.push_back(v.values);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-criteria optimization through ideal and anti-ideal comparison standards";

  // Later registrations are tried first, so the base class goes first.
  auto& base = py::register_exception<Error>(m, "MocsError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<GridCapError>(m, "GridCapError", base.ptr());

  py::class_<Problem>(m, "Problem")
      .def_property_readonly("variables", &Problem::variable_names)
      .def_property_readonly("objectives",
                             [](const Problem& p) {
                               std::vector<std::string> names;
                               for (const auto& o : p.objectives()) names.push_back(o.name);
                               return names;
                             })
      .def_property_readonly("directions",
                             [](const Problem& p) {
                               std::vector<std::string> d;
                               for (const auto& o : p.objectives()) d.push_back(to_string(o.direction));
                               return d;
                             })
      .def("evaluate", [](const Problem& p, std::vector<double> x) { return evaluate_objectives(p, Point{std::move(x)}).values; },
           py::arg("point"))
      .def("is_feasible", [](const Problem& p, std::vector<double> x, double tol) { return is_feasible(p, Point{std::move(x)}, tol); },
           py::arg("point"), py::arg("tol") = kDefaultFeasibilityTol)
      .def("feasible_points",
           [](const Problem& p, int resolution, unsigned workers) { return rows(enumerate_feasible(p, grid(resolution, workers))); },
           py::arg("resolution") = 10, py::arg("workers") = 1)
      .def("__str__", &format_problem);

  py::class_<ComparisonStandards>(m, "Standards")
      .def_property_readonly("ideal", [](const ComparisonStandards& s) { return s.ideal.values; })
      .def_property_readonly("anti_ideal", [](const ComparisonStandards& s) { return s.anti_ideal.values; })
      .def("delta", [](const ComparisonStandards& s, std::vector<double> f, bool squared) { return delta(s, ObjectiveVector{std::move(f)}, squared); },
           py::arg("f"), py::arg("squared") = false)
      .def("theta", [](const ComparisonStandards& s, std::vector<double> f, bool squared) { return theta(s, ObjectiveVector{std::move(f)}, squared); },
           py::arg("f"), py::arg("squared") = false)
      .def("gamma", [](const ComparisonStandards& s, std::vector<double> f, bool squared) { return gamma(s, ObjectiveVector{std::move(f)}, squared); },
           py::arg("f"), py::arg("squared") = false);

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("best_points", [](const SolveReport& r) { return rows(r.best_points); })
      .def_property_readonly("objective_vectors", [](const SolveReport& r) { return rows(r.objective_vectors); })
      .def_readonly("best_value", &SolveReport::best_value)
      .def_readonly("stage1_value", &SolveReport::stage1_value)
      .def_readonly("normalized", &SolveReport::normalized)
      .def_readonly("resolution_used", &SolveReport::resolution_used)
      .def_readonly("feasible_count", &SolveReport::feasible_count)
      .def_readonly("refined_points", &SolveReport::refined_points)
      .def_readonly("tie_count_before_filter", &SolveReport::tie_count_before_filter)
      .def_readonly("pareto_certified", &SolveReport::pareto_certified);

  m.def("parse_problem", [](const std::string& text) { return parse_problem(text); }, py::arg("text"));
  m.def("load_problem", &load_problem, py::arg("path"));
  m.def("example1", &example1_problem, "Per-circuit maximization on the three-vertex graph.");
  m.def("example2", &example2_problem, "Total circulation versus cost on the three-vertex graph.");

  m.def("standards",
        [](const Problem& p, int resolution, std::optional<std::vector<double>> ideal,
           std::optional<std::vector<double>> anti_ideal) { return standards_with(p, grid(resolution, 1), ideal, anti_ideal); },
        py::arg("problem"), py::arg("resolution") = 10, py::arg("ideal") = py::none(), py::arg("anti_ideal") = py::none());

  m.def(
      "solve",
      [](const Problem& p, const std::string& kind, int resolution, int refine, bool squared, bool normalized,
         std::optional<std::string> lex, bool certify, unsigned workers, std::optional<std::vector<double>> ideal,
         std::optional<std::vector<double>> anti_ideal) {
        SolveOptions o;
        o.grid = grid(resolution, workers);
        o.refine_rounds = refine;
        o.certify = certify;
        const ComparisonStandards s = standards_with(p, o.grid, ideal, anti_ideal);
        if (lex) return solve_lexicographic(p, s, lex_of(*lex), o);
        const ScalarizationKind k{scalarization_of(kind), squared};
        return normalized ? solve_normalized(p, s, k, o) : solve(p, s, k, o);
      },
      py::arg("problem"), py::arg("kind") = "gamma", py::arg("resolution") = 10, py::arg("refine") = 2,
      py::arg("squared") = false, py::arg("normalized") = false, py::arg("lex") = py::none(),
      py::arg("certify") = false, py::arg("workers") = 1, py::arg("ideal") = py::none(),
      py::arg("anti_ideal") = py::none(), py::call_guard<py::gil_scoped_release>());

  m.def(
      "pareto_front",
      [](const Problem& p, int resolution, unsigned workers) {
        const FrontReport f = brute_force_front(p, grid(resolution, workers));
        py::dict d;
        d["points"] = rows(f.points);
        d["vectors"] = rows(f.vectors);
        d["multiplicity"] = f.multiplicity;
        d["total_feasible"] = f.total_feasible;
        return d;
      },
      py::arg("problem"), py::arg("resolution") = 10, py::arg("workers") = 1);

  m.def(
      "dominates",
      [](const Problem& p, std::vector<double> u, std::vector<double> v) {
        return to_string(dominates(p, ObjectiveVector{std::move(u)}, ObjectiveVector{std::move(v)}));
      },
      py::arg("problem"), py::arg("u"), py::arg("v"));

  m.def(
      "certify",
      [](const Problem& p, std::vector<double> x, int resolution) {
        return certify_non_dominated(p, Point{std::move(x)}, grid(resolution, 1));
      },
      py::arg("problem"), py::arg("point"), py::arg("resolution") = 10);

  m.def(
      "circuits",
      [](const std::optional<std::string>& graph_text) {
        const Digraph g = graph_text ? parse_graph(*graph_text) : figure2_graph();
        std::vector<std::vector<std::string>> out;
        for (const auto& c : enumerate_simple_circuits(g).circuits) {
          std::vector<std::string> labels;
          for (std::size_t v : c.vertices) labels.push_back(g.vertices()[v]);
          out.push_back(std::move(labels));
        }
        return out;
      },
      py::arg("graph") = py::none(), "Simple circuits of a graph given as `from to capacity` lines.");

  m.def(
      "build",
      [](const std::optional<std::string>& graph_text, const std::string& objectives, const std::string& relation) {
        const Digraph g = graph_text ? parse_graph(*graph_text) : figure2_graph();
        CirculationObjectives criteria;
        if (objectives == "sum-cost") {
          criteria.kind = CirculationObjectives::Kind::SumAndCost;
        } else if (objectives != "per-circuit") {
          throw InvalidInput("unknown objectives '" + objectives + "'");
        }
        if (relation != "le" && relation != "eq") throw InvalidInput("unknown relation '" + relation + "'");
        return build_circulation_problem(g, enumerate_simple_circuits(g), criteria,
                                         relation == "eq" ? Relation::Equal : Relation::LessEqual);
      },
      py::arg("graph") = py::none(), py::arg("objectives") = "per-circuit", py::arg("relation") = "le");

  m.def(
      "verify",
      [](std::vector<Problem> problems, std::size_t random, std::uint64_t seed, int resolution) {
        for (auto& p : random_corpus(seed, random)) problems.push_back(std::move(p));
        SolveOptions o;
        o.grid.resolution = resolution;
        const TheoremReport report = verify_theorems(problems, o);
        py::dict out;
        for (const auto& c : report.checks) {
          py::dict d;
          d["passed"] = c.passed();
          d["cases"] = c.cases;
          d["failures"] = c.failures;
          d["counterexample"] = c.counterexample;
          out[py::str(c.name)] = d;
        }
        return out;
      },
      py::arg("problems") = std::vector<Problem>{}, py::arg("random") = 0, py::arg("seed") = 1,
      py::arg("resolution") = 10);
}
