#include "mocs/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mocs/error.hpp"
#include "mocs/parallel.hpp"

namespace mocs {

namespace {

void check_names(const std::set<std::string>& used, const std::vector<std::string>& declared,
                 const std::string& where) {
  for (const auto& name : used) {
    if (std::find(declared.begin(), declared.end(), name) == declared.end()) {
      throw InvalidInput(where + " references undeclared variable '" + name + "'");
    }
  }
}

bool in_domain(const VariableDomain& d, double v, double tol) {
  if (const auto* iv = std::get_if<Interval>(&d.kind)) {
    return v >= iv->lower - tol && v <= iv->upper + tol;
  }
  const auto& values = std::get<FiniteSet>(d.kind).values;
  // values are sorted: only the neighbours of the insertion point can match.
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it != values.end() && std::fabs(*it - v) <= tol) return true;
  return it != values.begin() && std::fabs(*std::prev(it) - v) <= tol;
}

}  // namespace

Problem::Problem(std::vector<VariableDomain> variables, std::vector<Objective> objectives,
                 std::vector<Constraint> constraints)
    : variables_(std::move(variables)),
      objectives_(std::move(objectives)),
      constraints_(std::move(constraints)) {
  if (objectives_.empty()) throw InvalidInput("problem needs at least one objective");

  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v.name).second) throw InvalidInput("duplicate variable '" + v.name + "'");
    if (const auto* iv = std::get_if<Interval>(&v.kind)) {
      if (!(iv->lower <= iv->upper)) {
        throw InvalidInput("variable '" + v.name + "': interval lower bound exceeds upper bound");
      }
    } else {
      const auto& values = std::get<FiniteSet>(v.kind).values;
      if (values.empty()) throw InvalidInput("variable '" + v.name + "': empty value set");
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i - 1] < values[i])) {
          throw InvalidInput("variable '" + v.name + "': set values must be strictly increasing");
        }
      }
    }
    names_.push_back(v.name);
  }

  seen.clear();
  for (const auto& o : objectives_) {
    if (!seen.insert(o.name).second) throw InvalidInput("duplicate objective '" + o.name + "'");
    check_names(free_variables(o.expr), names_, "objective '" + o.name + "'");
    bound_objectives_.emplace_back(o.expr, names_);
  }
  for (std::size_t j = 0; j < constraints_.size(); ++j) {
    check_names(free_variables(constraints_[j].lhs), names_,
                "constraint " + std::to_string(j + 1));
    bound_constraints_.emplace_back(constraints_[j].lhs, names_);
  }
}

double Problem::objective_value(std::size_t i, const Point& x) const {
  return bound_objectives_[i](x.values);
}

double Problem::constraint_lhs(std::size_t j, const Point& x) const {
  return bound_constraints_[j](x.values);
}

Point Problem::point_from(const Assignment& assignment) const {
  Point p;
  p.values.reserve(names_.size());
  for (const auto& name : names_) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw InvalidInput("no value for variable '" + name + "'");
    p.values.push_back(it->second);
  }
  return p;
}

Assignment Problem::assignment_of(const Point& x) const {
  Assignment a;
  for (std::size_t k = 0; k < names_.size(); ++k) a.emplace(names_[k], x.values.at(k));
  return a;
}

bool is_feasible(const Problem& p, const Point& x, double tol) {
  if (x.values.size() != p.variables().size()) {
    throw InvalidInput("point has " + std::to_string(x.values.size()) + " values, problem has " +
                       std::to_string(p.variables().size()) + " variables");
  }
  for (std::size_t k = 0; k < x.values.size(); ++k) {
    if (!in_domain(p.variables()[k], x.values[k], tol)) return false;
  }
  for (std::size_t j = 0; j < p.constraints().size(); ++j) {
    const double lhs = p.constraint_lhs(j, x);
    const double rhs = p.constraints()[j].rhs;
    switch (p.constraints()[j].relation) {
      case Relation::LessEqual:
        if (!(lhs <= rhs + tol)) return false;
        break;
      case Relation::Equal:
        if (!(std::fabs(lhs - rhs) <= tol)) return false;
        break;
      case Relation::GreaterEqual:
        if (!(lhs >= rhs - tol)) return false;
        break;
    }
  }
  return true;
}

ObjectiveVector evaluate_objectives(const Problem& p, const Point& x) {
  ObjectiveVector f;
  f.values.reserve(p.num_objectives());
  for (std::size_t i = 0; i < p.num_objectives(); ++i) f.values.push_back(p.objective_value(i, x));
  return f;
}

std::vector<double> grid_values(const VariableDomain& d, int resolution) {
  if (resolution < 1) throw InvalidInput("resolution must be at least 1");
  if (const auto* set = std::get_if<FiniteSet>(&d.kind)) return set->values;
  const auto& iv = std::get<Interval>(d.kind);
  if (iv.lower == iv.upper) return {iv.lower};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(resolution) + 1);
  const double width = iv.upper - iv.lower;
  for (int k = 0; k <= resolution; ++k) {
    out.push_back(k == resolution ? iv.upper : iv.lower + width * k / resolution);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t grid_size(const Problem& p, int resolution) {
  std::uint64_t total = 1;
  for (const auto& v : p.variables()) {
    const std::uint64_t n = grid_values(v, resolution).size();
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= n;
  }
  return total;
}

std::vector<Point> filter_grid(const Problem& p, std::span<const std::vector<double>> axes,
                               double tol, std::uint64_t grid_cap, unsigned workers) {
  std::uint64_t total = 1;
  for (const auto& a : axes) {
    if (a.empty()) return {};
    if (total > std::numeric_limits<std::uint64_t>::max() / a.size()) {
      throw GridCapError(std::numeric_limits<std::uint64_t>::max(), grid_cap);
    }
    total *= a.size();
  }
  if (total > grid_cap) throw GridCapError(total, grid_cap);

  const std::size_t dims = axes.size();
  if (dims == 0) {
    Point empty;
    if (is_feasible(p, empty, tol)) return {empty};
    return {};
  }

  // Each chunk owns a contiguous range of the outermost axis.
  const std::size_t outer = axes[0].size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, outer));
  std::vector<std::vector<Point>> parts(chunks);
  parallel_chunks(outer, workers, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(dims, 0);
    Point x;
    x.values.resize(dims);
    for (std::size_t o = begin; o < end; ++o) {
      idx.assign(dims, 0);
      idx[0] = o;
      while (true) {
        for (std::size_t k = 0; k < dims; ++k) x.values[k] = axes[k][idx[k]];
        if (is_feasible(p, x, tol)) parts[c].push_back(x);
        bool carry = true;
        for (std::size_t k = dims; carry && k > 1;) {
          --k;
          if (++idx[k] < axes[k].size()) {
            carry = false;
          } else {
            idx[k] = 0;
          }
        }
        if (carry) break;
      }
    }
  });

  std::vector<Point> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Point> enumerate_feasible(const Problem& p, const GridOptions& opts) {
  if (opts.feasibility_tol < 0.0) throw InvalidInput("feasibility tolerance must be nonnegative");
  std::vector<std::vector<double>> axes;
  axes.reserve(p.variables().size());
  for (const auto& v : p.variables()) axes.push_back(grid_values(v, opts.resolution));
  return filter_grid(p, axes, opts.feasibility_tol, opts.grid_cap, opts.workers);
}

FeasibleSet sample_feasible(const Problem& p, const GridOptions& opts) {
  FeasibleSet s;
  s.grid_size = grid_size(p, opts.resolution);
  s.points = enumerate_feasible(p, opts);
  s.objectives.resize(s.points.size());
  parallel_chunks(s.points.size(), opts.workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) s.objectives[i] = evaluate_objectives(p, s.points[i]);
  });
  return s;
}

std::string to_string(Direction d) { return d == Direction::Maximize ? "max" : "min"; }

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

}  // namespace mocs
