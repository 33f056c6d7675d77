#include "mocs/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mocs/error.hpp"

namespace mocs {

namespace {

double squared_distance(const ObjectiveVector& ref, const ObjectiveVector& f) {
  if (ref.size() != f.size()) {
    throw InvalidInput("objective vector has " + std::to_string(f.size()) + " entries, standards have " +
                       std::to_string(ref.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = ref[i] - f[i];
    sum += d * d;
  }
  return sum;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_span(const ComparisonStandards& s) {
  if (s.ideal.size() != s.anti_ideal.size() || s.ideal.size() != s.directions.size()) {
    throw InvalidInput("standards vectors have inconsistent lengths");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.ideal[i] == s.anti_ideal[i]) {
      throw InvalidInput("criterion " + std::to_string(i + 1) + " is constant (ideal equals anti-ideal)");
    }
  }
}

Problem build_normalized(const Problem& base, const ComparisonStandards& s) {
  check_span(s);
  if (s.size() != base.num_objectives()) throw InvalidInput("standards do not match the problem");
  std::vector<Objective> objectives;
  for (std::size_t i = 0; i < base.num_objectives(); ++i) {
    const double lo = std::min(s.ideal[i], s.anti_ideal[i]);
    const double hi = std::max(s.ideal[i], s.anti_ideal[i]);
    const auto& o = base.objectives()[i];
    Expr shifted = Expr::binary(Expr::Kind::Subtract, o.expr, Expr::constant(lo));
    objectives.push_back({o.name, Expr::binary(Expr::Kind::Divide, shifted, Expr::constant(hi - lo)), o.direction});
  }
  return Problem(base.variables(), std::move(objectives), base.constraints());
}

}  // namespace

Sense sense_of(Scalarization method) {
  return method == Scalarization::ThetaMax ? Sense::Maximize : Sense::Minimize;
}

double delta_squared(const ComparisonStandards& s, const ObjectiveVector& f) {
  return squared_distance(s.ideal, f);
}

double theta_squared(const ComparisonStandards& s, const ObjectiveVector& f) {
  return squared_distance(s.anti_ideal, f);
}

double delta(const ComparisonStandards& s, const ObjectiveVector& f, bool squared) {
  const double d2 = delta_squared(s, f);
  return squared ? d2 : std::sqrt(d2);
}

double theta(const ComparisonStandards& s, const ObjectiveVector& f, bool squared) {
  const double t2 = theta_squared(s, f);
  return squared ? t2 : std::sqrt(t2);
}

double gamma(const ComparisonStandards& s, const ObjectiveVector& f, bool squared) {
  const double d2 = delta_squared(s, f);
  const double t2 = theta_squared(s, f);
  if (t2 == 0.0) return kInf;
  return squared ? d2 / t2 : std::sqrt(d2) / std::sqrt(t2);
}

double comparison_value(Scalarization method, const ComparisonStandards& s, const ObjectiveVector& f) {
  switch (method) {
    case Scalarization::DeltaMin: return delta_squared(s, f);
    case Scalarization::ThetaMax: return theta_squared(s, f);
    case Scalarization::GammaMin: return gamma(s, f, true);
  }
  return 0.0;
}

ScalarObjective scalarized_objective(const ScalarizationKind& kind, const ComparisonStandards& s) {
  const bool sq = kind.squared;
  switch (kind.method) {
    case Scalarization::DeltaMin:
      return {Sense::Minimize, [s, sq](const ObjectiveVector& f) { return delta(s, f, sq); }};
    case Scalarization::ThetaMax:
      return {Sense::Maximize, [s, sq](const ObjectiveVector& f) { return theta(s, f, sq); }};
    case Scalarization::GammaMin:
      break;
  }
  return {Sense::Minimize, [s, sq](const ObjectiveVector& f) { return gamma(s, f, sq); }};
}

NormalizedProblem::NormalizedProblem(const Problem& base, ComparisonStandards standards)
    : base_(base), standards_(std::move(standards)), normalized_(build_normalized(base_, standards_)) {
  normalized_standards_.directions = standards_.directions;
  for (std::size_t i = 0; i < standards_.size(); ++i) {
    const double lo = std::min(standards_.ideal[i], standards_.anti_ideal[i]);
    const double hi = std::max(standards_.ideal[i], standards_.anti_ideal[i]);
    offset_.push_back(lo);
    span_.push_back(hi - lo);
    const bool max = standards_.directions[i] == Direction::Maximize;
    normalized_standards_.ideal.values.push_back(max ? 1.0 : 0.0);
    normalized_standards_.anti_ideal.values.push_back(max ? 0.0 : 1.0);
  }
  normalized_standards_.attained_at_ideal = standards_.attained_at_ideal;
  normalized_standards_.attained_at_anti_ideal = standards_.attained_at_anti_ideal;
}

double NormalizedProblem::normalize(std::size_t i, double value) const {
  return (value - offset_[i]) / span_[i];
}

ObjectiveVector NormalizedProblem::normalize(const ObjectiveVector& f) const {
  if (f.size() != span_.size()) throw InvalidInput("objective vector length does not match the problem");
  ObjectiveVector out;
  out.values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.values.push_back(normalize(i, f[i]));
  return out;
}

ObjectiveVector NormalizedProblem::evaluate(const Point& x) const {
  return evaluate_objectives(normalized_, x);
}

NormalizedProblem normalize(const Problem& p, const ComparisonStandards& s) {
  return NormalizedProblem(p, s);
}

std::string to_string(Scalarization method) {
  switch (method) {
    case Scalarization::DeltaMin: return "delta";
    case Scalarization::ThetaMax: return "theta";
    case Scalarization::GammaMin: return "gamma";
  }
  return "?";
}

}  // namespace mocs
