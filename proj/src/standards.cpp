#include "mocs/standards.hpp"

#include <cmath>

#include "mocs/error.hpp"

namespace mocs {

ComparisonStandards compute_standards(const Problem& p, const GridOptions& opts) {
  return compute_standards(p, sample_feasible(p, opts), opts.feasibility_tol);
}

ComparisonStandards compute_standards(const Problem& p, const FeasibleSet& set, double tol) {
  if (set.empty()) throw InfeasibleError("no feasible grid point; comparison standards undefined");
  const std::size_t n = p.num_objectives();

  ComparisonStandards s;
  s.ideal = set.objectives.front();
  s.anti_ideal = set.objectives.front();
  s.attained_at_ideal.assign(n, set.points.front());
  s.attained_at_anti_ideal.assign(n, set.points.front());
  for (std::size_t i = 0; i < n; ++i) s.directions.push_back(p.direction(i));

  for (std::size_t k = 1; k < set.size(); ++k) {
    const auto& f = set.objectives[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (better(s.directions[i], f[i], s.ideal[i])) {
        s.ideal.values[i] = f[i];
        s.attained_at_ideal[i] = set.points[k];
      }
      if (better(s.directions[i], s.anti_ideal[i], f[i])) {
        s.anti_ideal.values[i] = f[i];
        s.attained_at_anti_ideal[i] = set.points[k];
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(s.ideal[i] - s.anti_ideal[i]) <= tol) {
      throw InvalidInput("objective '" + p.objectives()[i].name +
                         "' is constant over the feasible grid (best equals worst)");
    }
  }
  return s;
}

void validate_standards(const ComparisonStandards& s) {
  const std::size_t n = s.directions.size();
  if (s.ideal.size() != n || s.anti_ideal.size() != n) {
    throw InvalidInput("standards length does not match the number of objectives");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s.ideal[i] == s.anti_ideal[i]) {
      throw InvalidInput("criterion " + std::to_string(i + 1) + ": ideal equals anti-ideal");
    }
    if (better(s.directions[i], s.anti_ideal[i], s.ideal[i])) {
      throw InvalidInput("criterion " + std::to_string(i + 1) + ": ideal " + format_number(s.ideal[i]) +
                         " is worse than anti-ideal " + format_number(s.anti_ideal[i]) + " for a " +
                         (s.directions[i] == Direction::Maximize ? "max" : "min") + " criterion");
    }
  }
}

ComparisonStandards override_standards(const ComparisonStandards& s,
                                       const std::optional<ObjectiveVector>& ideal,
                                       const std::optional<ObjectiveVector>& anti_ideal) {
  ComparisonStandards out = s;
  const std::size_t n = s.directions.size();
  auto apply = [n](const ObjectiveVector& src, ObjectiveVector& dst, std::vector<std::optional<Point>>& witness) {
    if (src.size() != n) {
      throw InvalidInput("override has " + std::to_string(src.size()) + " entries, expected " +
                         std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i] != dst[i]) witness[i].reset();
    }
    dst = src;
  };
  if (ideal) apply(*ideal, out.ideal, out.attained_at_ideal);
  if (anti_ideal) apply(*anti_ideal, out.anti_ideal, out.attained_at_anti_ideal);
  validate_standards(out);
  return out;
}

}  // namespace mocs
