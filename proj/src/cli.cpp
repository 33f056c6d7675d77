#include "mocs/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "mocs/circuits.hpp"
#include "mocs/error.hpp"
#include "mocs/parallel.hpp"
#include "mocs/pareto.hpp"
#include "mocs/problem_io.hpp"
#include "mocs/random_problem.hpp"
#include "mocs/standards.hpp"
#include "mocs/theorems.hpp"

namespace mocs::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "mocs-report/1";

std::string tuple(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + format_number(v[k]);
  return out + ")";
}

bool is_builtin_problem(const std::string& name) { return name == "example1" || name == "example2"; }

Problem problem_input(const std::string& name) {
  if (name == "example1") return example1_problem();
  if (name == "example2") return example2_problem();
  return load_problem(name);
}

Digraph graph_input(const std::string& name) {
  if (name == "figure2" || is_builtin_problem(name)) return figure2_graph();
  return load_graph(name);
}

GridOptions grid_of(const RunConfig& c) {
  return GridOptions{c.resolution, c.feasibility_tol, c.grid_cap, std::max(1u, c.workers)};
}

SolveOptions solve_options_of(const RunConfig& c) {
  SolveOptions o;
  o.grid = grid_of(c);
  o.refine_rounds = c.refine_rounds;
  o.tie_tol = c.tie_tol;
  o.stage_tol = c.stage_tol;
  o.certify = c.certify;
  return o;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Standards: return "standards";
    case Command::Solve: return "solve";
    case Command::Front: return "front";
    case Command::Verify: return "verify";
    case Command::Circuits: return "circuits";
    case Command::Build: return "build";
  }
  return "?";
}

Json point_json(const Problem& p, const Point& x) {
  Json j = Json::object();
  for (std::size_t k = 0; k < x.values.size(); ++k) j[p.variable_names()[k]] = x.values[k];
  return j;
}

Json settings_json(const RunConfig& c) {
  Json j;
  j["resolution"] = c.resolution;
  j["refine_rounds"] = c.refine_rounds;
  j["feasibility_tol"] = c.feasibility_tol;
  j["tie_tol"] = c.tie_tol;
  j["stage_tol"] = c.stage_tol;
  j["grid_cap"] = c.grid_cap;
  return j;
}

Json problem_json(const Problem& p) {
  Json j;
  j["variables"] = p.variable_names();
  Json objs = Json::array();
  for (const auto& o : p.objectives()) {
    objs.push_back(Json{{"name", o.name}, {"direction", to_string(o.direction)}, {"expr", to_string(o.expr)}});
  }
  j["objectives"] = objs;
  return j;
}

Json standards_json(const Problem& p, const ComparisonStandards& s) {
  auto witnesses = [&p](const std::vector<std::optional<Point>>& w) {
    Json arr = Json::array();
    for (const auto& x : w) arr.push_back(x ? point_json(p, *x) : Json(nullptr));
    return arr;
  };
  Json j;
  j["ideal"] = s.ideal.values;
  j["anti_ideal"] = s.anti_ideal.values;
  j["attained_at_ideal"] = witnesses(s.attained_at_ideal);
  j["attained_at_anti_ideal"] = witnesses(s.attained_at_anti_ideal);
  return j;
}

Json document(const RunConfig& c, const std::string& input) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command_name(c.command);
  j["input"] = input;
  j["settings"] = settings_json(c);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

ComparisonStandards standards_for(const Problem& p, const RunConfig& c) {
  ComparisonStandards s = compute_standards(p, grid_of(c));
  std::optional<ObjectiveVector> ideal;
  std::optional<ObjectiveVector> anti;
  if (c.ideal) ideal = ObjectiveVector{*c.ideal};
  if (c.anti_ideal) anti = ObjectiveVector{*c.anti_ideal};
  if (ideal || anti) s = override_standards(s, ideal, anti);
  return s;
}

void print_standards_table(std::ostream& out, const Problem& p, const ComparisonStandards& s) {
  out << "K (ideal, point a)      = " << tuple(s.ideal.values) << '\n';
  out << "W (anti-ideal, point b) = " << tuple(s.anti_ideal.values) << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << "  " << p.objectives()[i].name << " [" << to_string(p.direction(i)) << "]  K=" << format_number(s.ideal[i])
        << " at " << (s.attained_at_ideal[i] ? tuple(s.attained_at_ideal[i]->values) : std::string("(supplied)"))
        << "  W=" << format_number(s.anti_ideal[i]) << " at "
        << (s.attained_at_anti_ideal[i] ? tuple(s.attained_at_anti_ideal[i]->values) : std::string("(supplied)"))
        << '\n';
  }
}

int cmd_standards(const RunConfig& c, std::ostream& out) {
  const Problem p = problem_input(c.input);
  const ComparisonStandards s = standards_for(p, c);
  if (c.format == OutputFormat::Json) {
    Json j = document(c, c.input);
    j["problem"] = problem_json(p);
    j["standards"] = standards_json(p, s);
    emit(out, j);
  } else {
    out << "variables: ";
    for (std::size_t k = 0; k < p.variable_names().size(); ++k) out << (k ? ", " : "") << p.variable_names()[k];
    out << '\n';
    print_standards_table(out, p, s);
  }
  return kOk;
}

std::string kind_label(const SolveReport& r) {
  std::string label = r.lex_order ? "lex " + to_string(*r.lex_order) : to_string(r.kind.method);
  if (r.kind.squared) label += " (squared)";
  if (r.normalized) label += " (normalized)";
  return label;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const Problem p = problem_input(c.input);
  const ComparisonStandards s = standards_for(p, c);
  const SolveOptions opts = solve_options_of(c);
  const ScalarizationKind kind{c.method, c.squared};
  SolveReport r;
  if (c.lex) {
    r = solve_lexicographic(p, s, *c.lex, opts);
  } else if (c.normalized) {
    r = solve_normalized(p, s, kind, opts);
  } else {
    r = solve(p, s, kind, opts);
  }

  if (c.format == OutputFormat::Json) {
    Json j = document(c, c.input);
    j["problem"] = problem_json(p);
    j["standards"] = standards_json(p, s);
    Json sr;
    sr["kind"] = to_string(r.kind.method);
    sr["squared"] = r.kind.squared;
    sr["normalized"] = r.normalized;
    sr["lex_order"] = r.lex_order ? Json(to_string(*r.lex_order)) : Json(nullptr);
    sr["stage1_value"] = r.stage1_value ? Json(*r.stage1_value) : Json(nullptr);
    sr["best_value"] = r.best_value;
    Json points = Json::array();
    for (std::size_t k = 0; k < r.best_points.size(); ++k) {
      points.push_back(Json{{"point", point_json(p, r.best_points[k])}, {"objectives", r.objective_vectors[k].values}});
    }
    sr["best_points"] = points;
    sr["resolution_used"] = r.resolution_used;
    sr["feasible_count"] = r.feasible_count;
    sr["refined_points"] = r.refined_points;
    sr["tie_count_before_filter"] = r.tie_count_before_filter;
    sr["certification_requested"] = r.certification_requested;
    sr["pareto_certified"] = r.pareto_certified;
    j["solve"] = sr;
    emit(out, j);
  } else {
    out << "scalarization: " << kind_label(r) << '\n';
    out << "resolution: " << r.resolution_used << "  feasible grid points: " << r.feasible_count
        << "  refinement points: " << r.refined_points << '\n';
    print_standards_table(out, p, s);
    if (r.stage1_value) out << "stage-1 value: " << format_number(*r.stage1_value) << '\n';
    out << "best value: " << format_number(r.best_value) << '\n';
    out << "ties before dominance filter: " << r.tie_count_before_filter << '\n';
    out << "optimal points (" << r.best_points.size() << "):\n";
    for (std::size_t k = 0; k < r.best_points.size(); ++k) {
      out << "  y = " << tuple(r.best_points[k].values) << "  F = " << tuple(r.objective_vectors[k].values) << '\n';
    }
    out << "pareto certified: "
        << (!r.certification_requested ? "not requested" : r.pareto_certified ? "yes" : "NO") << '\n';
  }
  return r.certification_requested && !r.pareto_certified ? kCertificationFailed : kOk;
}

int cmd_front(const RunConfig& c, std::ostream& out) {
  const Problem p = problem_input(c.input);
  const FrontReport f = brute_force_front(p, grid_of(c));
  if (c.format == OutputFormat::Json) {
    Json j = document(c, c.input);
    j["problem"] = problem_json(p);
    Json members = Json::array();
    for (std::size_t k = 0; k < f.points.size(); ++k) {
      members.push_back(Json{{"point", point_json(p, f.points[k])},
                             {"objectives", f.vectors[k].values},
                             {"multiplicity", f.multiplicity[k]}});
    }
    j["front"] = Json{{"total_feasible", f.total_feasible}, {"size", f.points.size()}, {"members", members}};
    emit(out, j);
  } else {
    out << "feasible grid points: " << f.total_feasible << "  front size: " << f.points.size() << '\n';
    for (std::size_t k = 0; k < f.points.size(); ++k) {
      out << "  y = " << tuple(f.points[k].values) << "  F = " << tuple(f.vectors[k].values);
      if (f.multiplicity[k] > 1) out << "  x" << f.multiplicity[k];
      out << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<Problem> problems;
  if (!c.input.empty()) problems.push_back(problem_input(c.input));
  if (c.random_count > 0) {
    auto corpus = random_corpus(c.seed, c.random_count);
    problems.insert(problems.end(), std::make_move_iterator(corpus.begin()), std::make_move_iterator(corpus.end()));
  }
  if (problems.empty()) throw InvalidInput("verify needs a problem input or --random N");
  const TheoremReport report = verify_theorems(problems, solve_options_of(c));

  if (c.format == OutputFormat::Json) {
    Json j = document(c, c.input);
    j["random_count"] = c.random_count;
    j["seed"] = c.seed;
    j["problems"] = report.problems;
    Json checks = Json::array();
    for (const auto& t : report.checks) {
      checks.push_back(Json{{"name", t.name},
                            {"statement", t.statement},
                            {"passed", t.passed()},
                            {"cases", t.cases},
                            {"failures", t.failures},
                            {"counterexample", t.passed() ? Json(nullptr) : Json(t.counterexample)}});
    }
    j["checks"] = checks;
    j["all_passed"] = report.all_passed();
    emit(out, j);
  } else {
    out << "problems checked: " << report.problems << '\n';
    for (const auto& t : report.checks) {
      out << (t.passed() ? "PASS " : "FAIL ") << t.name << "  " << t.statement << "  [" << t.cases << " cases, "
          << t.failures << " failures]\n";
      if (!t.passed()) out << "     counterexample: " << t.counterexample << '\n';
    }
  }
  return report.all_passed() ? kOk : kCertificationFailed;
}

int cmd_circuits(const RunConfig& c, std::ostream& out) {
  const Digraph g = graph_input(c.input);
  const CircuitSet cs = enumerate_simple_circuits(g, c.circuit_cap);
  if (c.format == OutputFormat::Json) {
    Json j = document(c, c.input);
    j["vertices"] = g.vertices();
    Json list = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::vector<std::string> labels;
      for (std::size_t v : cs.circuits[i].vertices) labels.push_back(g.vertices()[v]);
      list.push_back(Json{{"variable", cs.variable_names[i]}, {"vertices", labels}});
    }
    j["circuits"] = list;
    emit(out, j);
  } else {
    out << "simple circuits: " << cs.size() << '\n';
    for (std::size_t i = 0; i < cs.size(); ++i) {
      out << "  a" << i + 1 << " (" << cs.variable_names[i] << "): " << describe(g, cs.circuits[i]) << '\n';
    }
  }
  return kOk;
}

int cmd_build(const RunConfig& c, std::ostream& out) {
  const Digraph g = graph_input(c.input);
  const CircuitSet cs = enumerate_simple_circuits(g, c.circuit_cap);
  const Problem p = build_circulation_problem(g, cs, {c.objectives, {}}, c.arc_relation);
  const std::string text = format_problem(p);
  if (c.format == OutputFormat::Json) {
    Json j = document(c, c.input);
    j["problem"] = problem_json(p);
    j["problem_file"] = text;
    emit(out, j);
  } else {
    out << text;
  }
  return kOk;
}

std::uint64_t env_grid_cap() {
  if (const char* v = std::getenv(kGridCapEnv)) {
    std::uint64_t cap = 0;
    const std::string_view s(v);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc{} && p == s.data() + s.size() && cap > 0) return cap;
  }
  return kDefaultGridCap;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.resolution < 1) throw InvalidInput("resolution must be at least 1");
    if (config.feasibility_tol < 0 || config.tie_tol < 0 || config.stage_tol < 0) {
      throw InvalidInput("tolerances must be nonnegative");
    }
    switch (config.command) {
      case Command::Standards: return cmd_standards(config, out);
      case Command::Solve: return cmd_solve(config, out);
      case Command::Front: return cmd_front(config, out);
      case Command::Verify: return cmd_verify(config, out);
      case Command::Circuits: return cmd_circuits(config, out);
      case Command::Build: return cmd_build(config, out);
    }
    return kUsage;
  } catch (const Error& e) {
    err << "mocs: error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse: return kParseError;
      case ErrorKind::Infeasible: return kInfeasible;
      case ErrorKind::GridCapExceeded:
      case ErrorKind::CircuitCapExceeded: return kCapExceeded;
      case ErrorKind::Certification: return kCertificationFailed;
      case ErrorKind::Evaluation: return kEvaluationError;
      case ErrorKind::InvalidInput: return kInvalidInput;
    }
    return kInvalidInput;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.workers = default_workers();
  config.grid_cap = env_grid_cap();

  CLI::App app{"Multi-criteria optimization through comparison standards"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  bool single_threaded = false;
  bool json = false;
  std::string format = "text";
  std::optional<std::uint64_t> grid_cap;
  std::string kind = "gamma";
  std::string lex;
  std::string objectives = "per-circuit";
  std::string relation = "le";

  auto common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", config.input, "Problem file, graph file, or built-in (example1, example2, figure2)");
    if (input_required) in->required();
    sub->add_option("-r,--resolution", config.resolution, "Grid steps per interval variable")->check(CLI::PositiveNumber);
    sub->add_option("--refine", config.refine_rounds, "Local refinement rounds")->check(CLI::NonNegativeNumber);
    sub->add_option("--feas-tol", config.feasibility_tol, "Feasibility tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--tie-tol", config.tie_tol, "Tie tolerance on squared values")->check(CLI::NonNegativeNumber);
    sub->add_option("--stage-tol", config.stage_tol, "Lexicographic stage tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid-cap", grid_cap, std::string("Maximum grid size (env ") + kGridCapEnv + ")");
    sub->add_option("-j,--threads", config.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--single-threaded", single_threaded, "Run on one thread");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--json", json, "Shorthand for --format json");
  };
  auto overrides = [&](CLI::App* sub) {
    sub->add_option("--ideal", config.ideal, "Supplied ideal point, comma separated")->delimiter(',');
    sub->add_option("--anti-ideal", config.anti_ideal, "Supplied anti-ideal point, comma separated")->delimiter(',');
  };

  auto* standards = app.add_subcommand("standards", "Compute the ideal and anti-ideal points");
  common(standards, true);
  overrides(standards);

  auto* solve_cmd = app.add_subcommand("solve", "Solve a scalarized problem");
  common(solve_cmd, true);
  overrides(solve_cmd);
  solve_cmd->add_option("-k,--kind", kind, "Scalarization")->check(CLI::IsMember({"delta", "theta", "gamma"}));
  solve_cmd->add_flag("--squared", config.squared, "Report squared distances");
  solve_cmd->add_flag("--normalized", config.normalized, "Scalarize normalized criteria");
  solve_cmd->add_option("--lex", lex, "Two-stage order")->check(CLI::IsMember({"delta-theta", "theta-delta"}));
  solve_cmd->add_flag("--certify", config.certify, "Certify non-dominance on the grid");

  auto* front = app.add_subcommand("front", "Brute-force Pareto front of the grid");
  common(front, true);

  auto* verify = app.add_subcommand("verify", "Run the Pareto-optimality property suites");
  common(verify, false);
  verify->add_option("--random", config.random_count, "Number of random problems to add");
  verify->add_option("--seed", config.seed, "Seed of the random corpus");

  auto* circuits = app.add_subcommand("circuits", "List the simple circuits of a graph");
  common(circuits, true);
  circuits->add_option("--circuit-cap", config.circuit_cap, "Maximum number of circuits");

  auto* build = app.add_subcommand("build", "Emit the circulation problem of a graph");
  common(build, true);
  build->add_option("--circuit-cap", config.circuit_cap, "Maximum number of circuits");
  build->add_option("--objectives", objectives, "Criteria")->check(CLI::IsMember({"per-circuit", "sum-cost"}));
  build->add_option("--relation", relation, "Relation on shared arcs")->check(CLI::IsMember({"le", "eq"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (standards->parsed()) config.command = Command::Standards;
  if (solve_cmd->parsed()) config.command = Command::Solve;
  if (front->parsed()) config.command = Command::Front;
  if (verify->parsed()) config.command = Command::Verify;
  if (circuits->parsed()) config.command = Command::Circuits;
  if (build->parsed()) config.command = Command::Build;

  if (single_threaded) config.workers = 1;
  if (grid_cap) config.grid_cap = *grid_cap;
  if (json) format = "json";
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  config.method = kind == "delta" ? Scalarization::DeltaMin
                  : kind == "theta" ? Scalarization::ThetaMax
                                    : Scalarization::GammaMin;
  if (!lex.empty()) config.lex = lex == "delta-theta" ? LexOrder::DeltaThenTheta : LexOrder::ThetaThenDelta;
  config.objectives = objectives == "sum-cost" ? CirculationObjectives::Kind::SumAndCost
                                               : CirculationObjectives::Kind::PerCircuit;
  config.arc_relation = relation == "eq" ? Relation::Equal : Relation::LessEqual;

  return run(config, out, err);
}

}  // namespace mocs::cli
