#include "mocs/solver.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "mocs/error.hpp"
#include "mocs/parallel.hpp"
#include "mocs/pareto.hpp"

namespace mocs {

namespace {

using ValueFn = std::function<double(const ObjectiveVector&)>;

struct Evaluator {
  Sense sense;
  ValueFn compare;  // squared form, used for every decision
  ValueFn report;   // value shown to the user
};

// Every point evaluated so far: the coarse grid first, then refinement
// points in the order they were generated.
struct Pool {
  std::vector<Point> points;
  std::vector<ObjectiveVector> vectors;
  std::vector<double> values;

  void add(Point x, ObjectiveVector f, double v) {
    points.push_back(std::move(x));
    vectors.push_back(std::move(f));
    values.push_back(v);
  }
};

bool tied(double v, double best, double tol) { return v == best || std::fabs(v - best) <= tol; }

struct Selection {
  double best = 0.0;
  std::vector<std::size_t> ties;
};

// Optimum of `values` restricted to `candidates`, and every candidate tied
// with it. NaN values never win.
Selection select(const std::vector<double>& values, const std::vector<std::size_t>& candidates, Sense sense,
                 double tol) {
  Selection sel;
  bool found = false;
  for (std::size_t k : candidates) {
    const double v = values[k];
    if (std::isnan(v)) continue;
    if (!found || (sense == Sense::Minimize ? v < sel.best : v > sel.best)) {
      sel.best = v;
      found = true;
    }
  }
  if (!found) throw EvalError("no candidate has a comparable scalar value");
  for (std::size_t k : candidates) {
    if (!std::isnan(values[k]) && tied(values[k], sel.best, tol)) sel.ties.push_back(k);
  }
  return sel;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = k;
  return out;
}

// Drops tied points that another tied point dominates.
std::vector<std::size_t> filter_ties(const std::vector<Direction>& dirs, const Pool& pool,
                                     const std::vector<std::size_t>& ties) {
  std::vector<std::size_t> kept;
  for (std::size_t a : ties) {
    bool dominated = false;
    for (std::size_t b : ties) {
      if (a != b && compare(dirs, pool.vectors[b], pool.vectors[a]) == Dominance::FirstDominates) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(a);
  }
  return kept;
}

std::vector<std::vector<double>> local_axes(const Problem& p, const Point& center,
                                            const std::vector<double>& half_width, int resolution) {
  std::vector<std::vector<double>> axes(center.values.size());
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const double c = center.values[k];
    const auto* iv = std::get_if<Interval>(&p.variables()[k].kind);
    if (iv == nullptr || half_width[k] <= 0.0) {
      axes[k] = {c};
      continue;
    }
    const double w = half_width[k];
    auto& axis = axes[k];
    axis.push_back(c);
    for (int j = 0; j <= resolution; ++j) {
      const double v = (c - w) + (2.0 * w) * j / resolution;
      axis.push_back(std::clamp(v, iv->lower, iv->upper));
    }
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  return axes;
}

SolveReport finish(const Problem& p, const Pool& pool, const std::vector<std::size_t>& kept,
                   std::size_t tie_count, const Evaluator& ev, const FeasibleSet& coarse,
                   const SolveOptions& opts, SolveReport report) {
  report.resolution_used = opts.grid.resolution;
  report.feasible_count = coarse.size();
  report.refined_points = pool.points.size() - coarse.size();
  report.tie_count_before_filter = tie_count;
  for (std::size_t k : kept) {
    report.best_points.push_back(pool.points[k]);
    report.objective_vectors.push_back(pool.vectors[k]);
  }
  report.best_value = ev.report(pool.vectors[kept.front()]);
  report.certification_requested = opts.certify;
  if (opts.certify) {
    report.pareto_certified = true;
    for (const auto& f : report.objective_vectors) {
      if (!is_non_dominated_in(p, f, coarse)) {
        report.pareto_certified = false;
        break;
      }
    }
  }
  return report;
}

FeasibleSet coarse_grid(const Problem& p, const SolveOptions& opts) {
  if (opts.tie_tol < 0.0 || opts.stage_tol < 0.0) throw InvalidInput("tolerances must be nonnegative");
  if (opts.refine_rounds < 0) throw InvalidInput("refine rounds must be nonnegative");
  FeasibleSet coarse = sample_feasible(p, opts.grid);
  if (coarse.empty()) throw InfeasibleError("no feasible grid point at resolution " + std::to_string(opts.grid.resolution));
  return coarse;
}

SolveReport run(const Problem& p, const Evaluator& ev, const SolveOptions& opts, SolveReport report) {
  const FeasibleSet coarse = coarse_grid(p, opts);
  const auto dirs = directions_of(p);

  Pool pool{coarse.points, coarse.objectives, std::vector<double>(coarse.size())};
  parallel_chunks(coarse.size(), opts.grid.workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) pool.values[k] = ev.compare(pool.vectors[k]);
  });

  Selection sel = select(pool.values, all_indices(pool.points.size()), ev.sense, opts.tie_tol);
  std::vector<std::size_t> kept = filter_ties(dirs, pool, sel.ties);

  std::vector<double> half_width(p.variables().size(), 0.0);
  bool refinable = false;
  for (std::size_t k = 0; k < half_width.size(); ++k) {
    if (const auto* iv = std::get_if<Interval>(&p.variables()[k].kind)) {
      half_width[k] = (iv->upper - iv->lower) / opts.grid.resolution;
      refinable = refinable || half_width[k] > 0.0;
    }
  }

  if (refinable && opts.refine_rounds > 0) {
    std::set<Point> seen(pool.points.begin(), pool.points.end());
    for (int round = 0; round < opts.refine_rounds; ++round) {
      const std::vector<std::size_t> incumbents = kept;
      for (std::size_t idx : incumbents) {
        const Point center = pool.points[idx];
        const auto axes = local_axes(p, center, half_width, opts.grid.resolution);
        for (Point& x : filter_grid(p, axes, opts.grid.feasibility_tol, opts.grid.grid_cap, opts.grid.workers)) {
          if (!seen.insert(x).second) continue;
          ObjectiveVector f = evaluate_objectives(p, x);
          const double v = ev.compare(f);
          pool.add(std::move(x), std::move(f), v);
        }
      }
      for (double& w : half_width) w = 2.0 * w / opts.grid.resolution;
      sel = select(pool.values, all_indices(pool.points.size()), ev.sense, opts.tie_tol);
      kept = filter_ties(dirs, pool, sel.ties);
    }
  }

  return finish(p, pool, kept, sel.ties.size(), ev, coarse, opts, std::move(report));
}

}  // namespace

SolveReport solve(const Problem& p, const ComparisonStandards& s, ScalarizationKind kind, const SolveOptions& opts) {
  validate_standards(s);
  const ScalarObjective shown = scalarized_objective(kind, s);
  Evaluator ev{sense_of(kind.method),
               [&s, m = kind.method](const ObjectiveVector& f) { return comparison_value(m, s, f); },
               shown.fn};
  SolveReport report;
  report.kind = kind;
  return run(p, ev, opts, std::move(report));
}

SolveReport solve_normalized(const Problem& p, const ComparisonStandards& s, ScalarizationKind kind,
                             const SolveOptions& opts) {
  validate_standards(s);
  const NormalizedProblem np = normalize(p, s);
  const ComparisonStandards& ns = np.normalized_standards();
  const ScalarObjective shown = scalarized_objective(kind, ns);
  Evaluator ev{sense_of(kind.method),
               [&np, &ns, m = kind.method](const ObjectiveVector& f) {
                 return comparison_value(m, ns, np.normalize(f));
               },
               [&np, &shown](const ObjectiveVector& f) { return shown(np.normalize(f)); }};
  SolveReport report;
  report.kind = kind;
  report.normalized = true;
  return run(p, ev, opts, std::move(report));
}

SolveReport solve_lexicographic(const Problem& p, const ComparisonStandards& s, LexOrder order,
                                const SolveOptions& opts) {
  validate_standards(s);
  const FeasibleSet coarse = coarse_grid(p, opts);
  const auto dirs = directions_of(p);

  const bool delta_first = order == LexOrder::DeltaThenTheta;
  const Scalarization first = delta_first ? Scalarization::DeltaMin : Scalarization::ThetaMax;
  const Scalarization second = delta_first ? Scalarization::ThetaMax : Scalarization::DeltaMin;

  std::vector<double> stage1(coarse.size());
  std::vector<double> stage2(coarse.size());
  parallel_chunks(coarse.size(), opts.grid.workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      stage1[k] = comparison_value(first, s, coarse.objectives[k]);
      stage2[k] = comparison_value(second, s, coarse.objectives[k]);
    }
  });

  const Selection band = select(stage1, all_indices(coarse.size()), sense_of(first), opts.stage_tol);
  const Selection sel = select(stage2, band.ties, sense_of(second), opts.tie_tol);

  Pool pool{coarse.points, coarse.objectives, stage2};
  const auto kept = filter_ties(dirs, pool, sel.ties);

  const ScalarObjective shown = scalarized_objective({second, false}, s);
  Evaluator ev{sense_of(second), shown.fn, shown.fn};
  SolveReport report;
  report.kind = {second, false};
  report.lex_order = order;
  report.stage1_value = std::sqrt(band.best);
  SolveOptions no_refine = opts;
  no_refine.refine_rounds = 0;
  return finish(p, pool, kept, sel.ties.size(), ev, coarse, no_refine, std::move(report));
}

std::string to_string(LexOrder order) {
  return order == LexOrder::DeltaThenTheta ? "delta-theta" : "theta-delta";
}

}  // namespace mocs
