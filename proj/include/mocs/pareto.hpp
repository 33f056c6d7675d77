#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mocs/problem.hpp"
#include "mocs/standards.hpp"

namespace mocs {

enum class Dominance { FirstDominates, SecondDominates, Incomparable, Equal };

/// Direction-aware Pareto comparison of two objective vectors. `u`
/// dominates `v` when it is no worse in every criterion and strictly better
/// in at least one. Components are compared exactly.
Dominance compare(std::span<const Direction> directions, const ObjectiveVector& u, const ObjectiveVector& v);

Dominance dominates(const Problem& p, const ObjectiveVector& u, const ObjectiveVector& v);

std::vector<Direction> directions_of(const Problem& p);

/// mask[k] is true iff no vector in `vectors` dominates vectors[k].
std::vector<bool> non_dominated_mask(std::span<const Direction> directions,
                                     std::span<const ObjectiveVector> vectors, unsigned workers = 1);

/// Non-dominated subset of a feasible grid. Points with equal objective
/// vectors collapse onto the first one enumerated; `multiplicity` counts
/// how many grid points share each member's vector.
struct FrontReport {
  std::vector<Point> points;
  std::vector<ObjectiveVector> vectors;
  std::vector<std::size_t> multiplicity;
  std::size_t total_feasible = 0;
};

FrontReport pareto_front(const Problem& p, const FeasibleSet& set, unsigned workers = 1);

/// Throws InfeasibleError on an empty feasible grid and GridCapError when
/// the grid is too large.
FrontReport brute_force_front(const Problem& p, const GridOptions& opts);

/// true iff no point of `set` dominates `f`.
bool is_non_dominated_in(const Problem& p, const ObjectiveVector& f, const FeasibleSet& set);

/// true iff no feasible grid point dominates `candidate`. Throws
/// InvalidInput if the candidate itself is infeasible.
bool certify_non_dominated(const Problem& p, const Point& candidate, const GridOptions& opts);

/// Compares the Pareto sets of `p` and of its normalized form over the same
/// grid; true iff they select exactly the same grid points.
bool verify_theorem5(const Problem& p, const ComparisonStandards& s, const GridOptions& opts);

std::string to_string(Dominance d);

}  // namespace mocs
