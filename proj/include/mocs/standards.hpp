#pragma once

#include <optional>
#include <vector>

#include "mocs/problem.hpp"

namespace mocs {

/// Comparison standards of a problem: the ideal point (best value of each
/// criterion taken separately) and the anti-ideal point (worst value of
/// each criterion). Neither point needs to be attainable jointly.
struct ComparisonStandards {
  ObjectiveVector ideal;
  ObjectiveVector anti_ideal;
  std::vector<Direction> directions;
  std::vector<std::optional<Point>> attained_at_ideal;
  std::vector<std::optional<Point>> attained_at_anti_ideal;

  std::size_t size() const noexcept { return ideal.size(); }
};

/// true if `a` is strictly better than `b` for direction `d`.
inline bool better(Direction d, double a, double b) {
  return d == Direction::Maximize ? a > b : a < b;
}

/// Best and worst value of every criterion over the feasible grid. Witnesses
/// are the first enumerated points attaining each bound.
///
/// Throws InfeasibleError if the grid has no feasible point and InvalidInput
/// if some criterion is constant (|K_i - W_i| <= tol).
ComparisonStandards compute_standards(const Problem& p, const GridOptions& opts);

/// Same computation over an already sampled feasible set.
ComparisonStandards compute_standards(const Problem& p, const FeasibleSet& set, double tol);

/// Replaces the ideal and/or anti-ideal with externally supplied estimates.
/// Overridden entries lose their witnesses. Throws InvalidInput on a length
/// mismatch, on an ideal that is worse than the anti-ideal for its
/// direction, or on coinciding entries.
ComparisonStandards override_standards(const ComparisonStandards& s,
                                       const std::optional<ObjectiveVector>& ideal,
                                       const std::optional<ObjectiveVector>& anti_ideal);

/// Throws InvalidInput unless the direction and distinctness invariants hold.
void validate_standards(const ComparisonStandards& s);

}  // namespace mocs
