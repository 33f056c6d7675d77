#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mocs/problem.hpp"
#include "mocs/solver.hpp"

namespace mocs {

/// Outcome of one executable property over a set of problems.
struct TheoremCheck {
  std::string name;
  std::string statement;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failure, if any.
  std::string counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  std::size_t problems = 0;

  bool all_passed() const;
};

/// Runs every property on every problem, with standards computed on the
/// same grid that is searched:
///
///   theorem1      Δ-minimal points are Pareto-optimal
///   theorem2      θ-maximal points are Pareto-optimal
///   theorem3      both lexicographic orders give Pareto-optimal points
///   theorem4      γ-minimal points are Pareto-optimal
///   theorem5      normalization leaves the Pareto set unchanged
///   root-free     squared and rooted scalarizations pick the same points
///
/// Pareto-optimality is judged against the brute-force front of the grid.
/// Refinement is disabled: the properties concern the grid optimum.
TheoremReport verify_theorems(std::span<const Problem> problems, const SolveOptions& opts);

}  // namespace mocs
