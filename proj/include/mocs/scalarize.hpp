#pragma once

#include <functional>
#include <string>

#include "mocs/problem.hpp"
#include "mocs/standards.hpp"

namespace mocs {

/// Which single-criterion surrogate replaces the multi-criteria objective.
enum class Scalarization {
  DeltaMin,  ///< minimize the distance to the ideal point
  ThetaMax,  ///< maximize the distance to the anti-ideal point
  GammaMin,  ///< minimize the ratio of the two distances
};

struct ScalarizationKind {
  Scalarization method = Scalarization::GammaMin;
  /// Report squared distances (and the ratio of squared sums) instead of
  /// the rooted values. Optima are the same either way.
  bool squared = false;
};

enum class Sense { Minimize, Maximize };

Sense sense_of(Scalarization method);

/// Σ_i (ideal_i - f_i)^2, summed in criterion order.
double delta_squared(const ComparisonStandards& s, const ObjectiveVector& f);
/// Σ_i (anti_ideal_i - f_i)^2, summed in criterion order.
double theta_squared(const ComparisonStandards& s, const ObjectiveVector& f);

double delta(const ComparisonStandards& s, const ObjectiveVector& f, bool squared = false);
double theta(const ComparisonStandards& s, const ObjectiveVector& f, bool squared = false);

/// delta / theta, or +infinity when theta is zero (the point sits on the
/// anti-ideal). The squared variant is the ratio of squared sums.
double gamma(const ComparisonStandards& s, const ObjectiveVector& f, bool squared = false);

/// The squared-form value every comparison in the solver is made on.
double comparison_value(Scalarization method, const ComparisonStandards& s, const ObjectiveVector& f);

struct ScalarObjective {
  Sense sense;
  std::function<double(const ObjectiveVector&)> fn;

  double operator()(const ObjectiveVector& f) const { return fn(f); }
};

ScalarObjective scalarized_objective(const ScalarizationKind& kind, const ComparisonStandards& s);

/// Criteria rescaled to [0, 1] using the original ideal and anti-ideal:
/// f_i = (F_i - min(K_i, W_i)) / (max(K_i, W_i) - min(K_i, W_i)).
class NormalizedProblem {
 public:
  /// Throws InvalidInput if some K_i == W_i or the lengths disagree.
  NormalizedProblem(const Problem& base, ComparisonStandards standards);

  const Problem& base() const noexcept { return base_; }
  const ComparisonStandards& standards() const noexcept { return standards_; }

  /// Ideal 1 / anti-ideal 0 for max criteria, 0 / 1 for min criteria.
  const ComparisonStandards& normalized_standards() const noexcept { return normalized_standards_; }

  double normalize(std::size_t i, double value) const;
  ObjectiveVector normalize(const ObjectiveVector& f) const;
  ObjectiveVector evaluate(const Point& x) const;

  /// The normalized criteria as an ordinary problem over the same
  /// variables and constraints; its objectives compute exactly `normalize`.
  const Problem& as_problem() const noexcept { return normalized_; }

 private:
  Problem base_;
  ComparisonStandards standards_;
  ComparisonStandards normalized_standards_;
  std::vector<double> offset_;
  std::vector<double> span_;
  Problem normalized_;
};

NormalizedProblem normalize(const Problem& p, const ComparisonStandards& s);

std::string to_string(Scalarization method);

}  // namespace mocs
