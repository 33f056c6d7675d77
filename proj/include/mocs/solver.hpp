#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mocs/problem.hpp"
#include "mocs/scalarize.hpp"
#include "mocs/standards.hpp"

namespace mocs {

/// Priority order for the two-stage solve: the second distance is optimized
/// only among points that are optimal for the first one.
enum class LexOrder { DeltaThenTheta, ThetaThenDelta };

inline constexpr double kDefaultTieTol = 1e-9;

struct SolveOptions {
  GridOptions grid;
  int refine_rounds = 0;
  /// Absolute tolerance on squared-form values within which points tie.
  double tie_tol = kDefaultTieTol;
  /// Width of the band that replaces the stage-1 equality constraint.
  double stage_tol = kDefaultTieTol;
  /// Check every reported point for non-dominance on the coarse grid.
  bool certify = false;
};

struct SolveReport {
  std::vector<Point> best_points;
  /// Scalar value of the reported optimum, rooted unless `kind.squared`.
  double best_value = 0.0;
  /// Original (unnormalized) criteria of each best point.
  std::vector<ObjectiveVector> objective_vectors;
  ScalarizationKind kind;
  std::optional<LexOrder> lex_order;
  /// Stage-1 optimum of a lexicographic solve, rooted.
  std::optional<double> stage1_value;
  bool normalized = false;
  int resolution_used = 0;
  std::size_t feasible_count = 0;
  std::size_t refined_points = 0;
  std::size_t tie_count_before_filter = 0;
  bool certification_requested = false;
  bool pareto_certified = false;
};

/// Optimizes the scalarization over the feasible grid, then refines
/// `refine_rounds` times around the incumbents and drops tied points that
/// another tied point dominates. Throws InfeasibleError on an empty grid.
SolveReport solve(const Problem& p, const ComparisonStandards& s, ScalarizationKind kind,
                  const SolveOptions& opts);

/// Two-stage solve. Stage 1 optimizes the first distance; stage 2 optimizes
/// the second among points whose stage-1 value lies within `stage_tol` of
/// the stage-1 optimum.
SolveReport solve_lexicographic(const Problem& p, const ComparisonStandards& s, LexOrder order,
                                const SolveOptions& opts);

/// Like `solve`, but the scalarization sees normalized criteria and the
/// normalized ideal/anti-ideal.
SolveReport solve_normalized(const Problem& p, const ComparisonStandards& s, ScalarizationKind kind,
                             const SolveOptions& opts);

std::string to_string(LexOrder order);

}  // namespace mocs
