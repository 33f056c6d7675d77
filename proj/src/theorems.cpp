#include "mocs/theorems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mocs/pareto.hpp"
#include "mocs/standards.hpp"

namespace mocs {

namespace {

std::string tuple(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + format_number(v[k]);
  return out + ")";
}

void record(TheoremCheck& check, bool ok, const std::string& detail) {
  ++check.cases;
  if (ok) return;
  if (check.failures++ == 0) check.counterexample = detail;
}

// Every reported point's vector must be on the brute-force front.
std::string off_front(const SolveReport& r, const std::set<std::vector<double>>& front) {
  for (std::size_t k = 0; k < r.best_points.size(); ++k) {
    if (front.count(r.objective_vectors[k].values) == 0) {
      return "point " + tuple(r.best_points[k].values) + " with criteria " + tuple(r.objective_vectors[k].values) +
             " is dominated";
    }
  }
  return {};
}

}  // namespace

bool TheoremReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.passed(); });
}

TheoremReport verify_theorems(std::span<const Problem> problems, const SolveOptions& opts) {
  TheoremReport report;
  report.problems = problems.size();
  TheoremCheck t1{"theorem1", "delta-minimal points are Pareto-optimal", 0, 0, {}};
  TheoremCheck t2{"theorem2", "theta-maximal points are Pareto-optimal", 0, 0, {}};
  TheoremCheck t3{"theorem3", "lexicographic delta/theta optima are Pareto-optimal for both orders", 0, 0, {}};
  TheoremCheck t4{"theorem4", "gamma-minimal points are Pareto-optimal", 0, 0, {}};
  TheoremCheck t5{"theorem5", "normalized and original problems share the Pareto set", 0, 0, {}};
  TheoremCheck rf{"root-free", "squared and rooted scalarizations select the same points", 0, 0, {}};

  SolveOptions grid_only = opts;
  grid_only.refine_rounds = 0;
  grid_only.certify = false;

  for (std::size_t idx = 0; idx < problems.size(); ++idx) {
    const Problem& p = problems[idx];
    const std::string where = "problem " + std::to_string(idx + 1) + ": ";
    const FeasibleSet set = sample_feasible(p, grid_only.grid);
    const ComparisonStandards s = compute_standards(p, set, grid_only.grid.feasibility_tol);
    const FrontReport front = pareto_front(p, set, grid_only.grid.workers);
    std::set<std::vector<double>> front_vectors;
    for (const auto& f : front.vectors) front_vectors.insert(f.values);

    auto check_kind = [&](TheoremCheck& check, Scalarization method) {
      const SolveReport rooted = solve(p, s, {method, false}, grid_only);
      const std::string bad = off_front(rooted, front_vectors);
      record(check, bad.empty(), where + to_string(method) + ": " + bad);
      const SolveReport squared = solve(p, s, {method, true}, grid_only);
      record(rf, squared.best_points == rooted.best_points,
             where + to_string(method) + ": squared form selects a different point set");
    };
    check_kind(t1, Scalarization::DeltaMin);
    check_kind(t2, Scalarization::ThetaMax);
    check_kind(t4, Scalarization::GammaMin);

    for (LexOrder order : {LexOrder::DeltaThenTheta, LexOrder::ThetaThenDelta}) {
      const SolveReport r = solve_lexicographic(p, s, order, grid_only);
      const std::string bad = off_front(r, front_vectors);
      record(t3, bad.empty(), where + to_string(order) + ": " + bad);
    }

    record(t5, verify_theorem5(p, s, grid_only.grid), where + "normalized Pareto set differs");
  }

  report.checks = {t1, t2, t3, t4, t5, rf};
  return report;
}

}  // namespace mocs
