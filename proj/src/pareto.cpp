#include "mocs/pareto.hpp"

#include <map>

#include "mocs/error.hpp"
#include "mocs/parallel.hpp"
#include "mocs/scalarize.hpp"

namespace mocs {

Dominance compare(std::span<const Direction> directions, const ObjectiveVector& u, const ObjectiveVector& v) {
  if (u.size() != directions.size() || v.size() != directions.size()) {
    throw InvalidInput("objective vectors must have one entry per objective");
  }
  bool u_better = false;
  bool v_better = false;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (better(directions[i], u[i], v[i])) {
      u_better = true;
    } else if (better(directions[i], v[i], u[i])) {
      v_better = true;
    }
    if (u_better && v_better) return Dominance::Incomparable;
  }
  if (u_better) return Dominance::FirstDominates;
  if (v_better) return Dominance::SecondDominates;
  return Dominance::Equal;
}

std::vector<Direction> directions_of(const Problem& p) {
  std::vector<Direction> out;
  for (const auto& o : p.objectives()) out.push_back(o.direction);
  return out;
}

Dominance dominates(const Problem& p, const ObjectiveVector& u, const ObjectiveVector& v) {
  return compare(directions_of(p), u, v);
}

std::vector<bool> non_dominated_mask(std::span<const Direction> directions,
                                     std::span<const ObjectiveVector> vectors, unsigned workers) {
  // std::vector<bool> packs bits; per-chunk writes would race, so use chars.
  std::vector<char> flags(vectors.size(), 1);
  parallel_chunks(vectors.size(), workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (j != k && compare(directions, vectors[j], vectors[k]) == Dominance::FirstDominates) {
          flags[k] = 0;
          break;
        }
      }
    }
  });
  return {flags.begin(), flags.end()};
}

FrontReport pareto_front(const Problem& p, const FeasibleSet& set, unsigned workers) {
  const auto dirs = directions_of(p);
  const auto mask = non_dominated_mask(dirs, set.objectives, workers);
  FrontReport front;
  front.total_feasible = set.size();
  std::map<std::vector<double>, std::size_t> slot;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (!mask[k]) continue;
    auto [it, inserted] = slot.emplace(set.objectives[k].values, front.points.size());
    if (inserted) {
      front.points.push_back(set.points[k]);
      front.vectors.push_back(set.objectives[k]);
      front.multiplicity.push_back(1);
    } else {
      ++front.multiplicity[it->second];
    }
  }
  return front;
}

FrontReport brute_force_front(const Problem& p, const GridOptions& opts) {
  const FeasibleSet set = sample_feasible(p, opts);
  if (set.empty()) throw InfeasibleError("no feasible grid point");
  return pareto_front(p, set, opts.workers);
}

bool is_non_dominated_in(const Problem& p, const ObjectiveVector& f, const FeasibleSet& set) {
  const auto dirs = directions_of(p);
  for (const auto& g : set.objectives) {
    if (compare(dirs, g, f) == Dominance::FirstDominates) return false;
  }
  return true;
}

bool certify_non_dominated(const Problem& p, const Point& candidate, const GridOptions& opts) {
  if (!is_feasible(p, candidate, opts.feasibility_tol)) {
    throw InvalidInput("candidate point is infeasible");
  }
  return is_non_dominated_in(p, evaluate_objectives(p, candidate), sample_feasible(p, opts));
}

bool verify_theorem5(const Problem& p, const ComparisonStandards& s, const GridOptions& opts) {
  const NormalizedProblem np = normalize(p, s);
  const FeasibleSet original = sample_feasible(p, opts);
  const FeasibleSet scaled = sample_feasible(np.as_problem(), opts);
  if (original.points != scaled.points) return false;
  const auto dirs = directions_of(p);
  return non_dominated_mask(dirs, original.objectives, opts.workers) ==
         non_dominated_mask(dirs, scaled.objectives, opts.workers);
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::FirstDominates: return "first-dominates";
    case Dominance::SecondDominates: return "second-dominates";
    case Dominance::Incomparable: return "incomparable";
    case Dominance::Equal: return "equal";
  }
  return "?";
}

}  // namespace mocs
