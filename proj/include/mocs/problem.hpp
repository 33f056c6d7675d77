#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mocs/expr.hpp"

namespace mocs {

enum class Direction { Maximize, Minimize };

struct Objective {
  std::string name;
  Expr expr;
  Direction direction = Direction::Maximize;
};

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  Expr lhs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Strictly increasing list of admissible values.
struct FiniteSet {
  std::vector<double> values;
};

struct VariableDomain {
  std::string name;
  std::variant<Interval, FiniteSet> kind;
};

/// Values for every problem variable, in the problem's variable order.
struct Point {
  std::vector<double> values;

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;
};

/// One value per objective, in the problem's objective order.
struct ObjectiveVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  bool operator==(const ObjectiveVector&) const = default;
};

/// A multi-criteria problem: objectives with directions, constraints and
/// variable domains. Immutable once constructed; the constructor validates
/// every structural invariant and compiles the expressions.
class Problem {
 public:
  /// Throws InvalidInput on: no objectives, duplicate names, a reference to an
  /// undeclared variable, `lower > upper`, or a set that is empty or not
  /// strictly increasing.
  Problem(std::vector<VariableDomain> variables, std::vector<Objective> objectives,
          std::vector<Constraint> constraints = {});

  const std::vector<VariableDomain>& variables() const noexcept { return variables_; }
  const std::vector<Objective>& objectives() const noexcept { return objectives_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  std::size_t num_objectives() const noexcept { return objectives_.size(); }
  Direction direction(std::size_t i) const { return objectives_[i].direction; }

  double objective_value(std::size_t i, const Point& x) const;
  double constraint_lhs(std::size_t j, const Point& x) const;

  Point point_from(const Assignment& assignment) const;
  Assignment assignment_of(const Point& x) const;

 private:
  std::vector<VariableDomain> variables_;
  std::vector<Objective> objectives_;
  std::vector<Constraint> constraints_;
  std::vector<std::string> names_;
  std::vector<BoundExpr> bound_objectives_;
  std::vector<BoundExpr> bound_constraints_;
};

inline constexpr double kDefaultFeasibilityTol = 1e-9;
inline constexpr std::uint64_t kDefaultGridCap = 10'000'000;

/// Grid enumeration settings shared by every brute-force routine.
struct GridOptions {
  int resolution = 10;
  double feasibility_tol = kDefaultFeasibilityTol;
  std::uint64_t grid_cap = kDefaultGridCap;
  unsigned workers = 1;
};

bool is_feasible(const Problem& p, const Point& x, double tol);

ObjectiveVector evaluate_objectives(const Problem& p, const Point& x);

/// Grid values of one domain: `resolution` equal steps over an interval
/// (both ends included), or the set itself.
std::vector<double> grid_values(const VariableDomain& d, int resolution);

/// Product of the per-variable grid sizes, saturating at UINT64_MAX.
std::uint64_t grid_size(const Problem& p, int resolution);

/// Every feasible grid point in lexicographic order (first variable slowest).
/// Throws GridCapError when the grid exceeds `opts.grid_cap`. With
/// `opts.workers > 1` the outermost variable is split across threads; the
/// result is identical to the single-threaded one.
std::vector<Point> enumerate_feasible(const Problem& p, const GridOptions& opts);

/// Feasible grid points together with their objective vectors.
struct FeasibleSet {
  std::vector<Point> points;
  std::vector<ObjectiveVector> objectives;
  std::uint64_t grid_size = 0;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
};

FeasibleSet sample_feasible(const Problem& p, const GridOptions& opts);

/// Evaluates every point of an explicit grid (given per-variable value
/// lists) and keeps the feasible ones, in lexicographic order.
std::vector<Point> filter_grid(const Problem& p, std::span<const std::vector<double>> axes,
                               double tol, std::uint64_t grid_cap, unsigned workers);

std::string to_string(Direction d);
std::string to_string(Relation r);

}  // namespace mocs
