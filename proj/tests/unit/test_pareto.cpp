#include <gtest/gtest.h>

#include <random>

#include "mocs/circuits.hpp"
#include "mocs/error.hpp"
#include "mocs/pareto.hpp"
#include "mocs/random_problem.hpp"
#include "mocs/scalarize.hpp"
#include "mocs/standards.hpp"

namespace mocs {
namespace {

using V = std::vector<double>;
ObjectiveVector f(V v) { return ObjectiveVector{std::move(v)}; }

TEST(Dominance, ExampleCases) {
  EXPECT_EQ(dominates(example2_problem(), f({2, 1}), f({1, 2})), Dominance::FirstDominates);
  EXPECT_EQ(dominates(example2_problem(), f({1, 2}), f({2, 1})), Dominance::SecondDominates);
  EXPECT_EQ(dominates(example1_problem(), f({1, 1, 0}), f({1, 1, 0})), Dominance::Equal);
  const std::vector<Direction> max2 = {Direction::Maximize, Direction::Maximize};
  EXPECT_EQ(compare(max2, f({1, 0}), f({0, 1})), Dominance::Incomparable);
  EXPECT_THROW(compare(max2, f({1, 0}), f({0, 1, 2})), InvalidInput);
}

TEST(Dominance, StrictPartialOrderOnRandomVectors) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> val(0, 3);
  const std::vector<Direction> dirs = {Direction::Maximize, Direction::Minimize, Direction::Maximize};
  auto draw = [&] { return f({double(val(rng)), double(val(rng)), double(val(rng))}); };
  for (int k = 0; k < 2000; ++k) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    EXPECT_EQ(compare(dirs, a, a), Dominance::Equal);
    const auto ab = compare(dirs, a, b);
    const auto ba = compare(dirs, b, a);
    if (ab == Dominance::FirstDominates) EXPECT_EQ(ba, Dominance::SecondDominates);
    if (ab == Dominance::Incomparable) EXPECT_EQ(ba, Dominance::Incomparable);
    if (ab == Dominance::FirstDominates && compare(dirs, b, c) == Dominance::FirstDominates) {
      EXPECT_EQ(compare(dirs, a, c), Dominance::FirstDominates);
    }
  }
}

TEST(Front, Example1Corners) {
  GridOptions opts;
  opts.resolution = 1;
  const auto front = brute_force_front(example1_problem(), opts);
  EXPECT_EQ(front.total_feasible, 5u);
  ASSERT_EQ(front.points.size(), 2u);
  EXPECT_EQ(front.vectors[0].values, (V{0, 0, 1}));
  EXPECT_EQ(front.vectors[1].values, (V{1, 1, 0}));
}

TEST(Front, Example2ContainsTheCheapestPoint) {
  const auto front = brute_force_front(example2_problem(), GridOptions{});
  ASSERT_EQ(front.points.size(), 1u);
  EXPECT_EQ(front.vectors[0].values, (V{2, 1}));
  EXPECT_EQ(front.points[0].values, (V{1, 1, 0}));
}

TEST(Front, SingleFeasiblePointAndEmptyGrid) {
  const Problem one({{"x", FiniteSet{{4}}}}, {{"F", Expr::variable("x"), Direction::Maximize}});
  EXPECT_EQ(brute_force_front(one, GridOptions{}).points.size(), 1u);
  const Problem none({{"x", FiniteSet{{4}}}}, {{"F", Expr::variable("x"), Direction::Maximize}},
                     {{Expr::variable("x"), Relation::LessEqual, 0}});
  EXPECT_THROW(brute_force_front(none, GridOptions{}), InfeasibleError);
}

TEST(Front, DuplicatesKeepFirstPointWithMultiplicity) {
  const Problem p({{"x", FiniteSet{{-1, 0, 1}}}}, {{"F", parse_expr("x^2"), Direction::Maximize}});
  const auto front = brute_force_front(p, GridOptions{});
  ASSERT_EQ(front.points.size(), 1u);
  EXPECT_EQ(front.points[0].values, (V{-1}));
  EXPECT_EQ(front.multiplicity[0], 2u);
}

// Minimality and completeness rechecked with an independent quadratic pass.
TEST(Front, MinimalAndCompleteOnRandomProblems) {
  for (const Problem& p : random_corpus(23, 50)) {
    const auto set = sample_feasible(p, GridOptions{});
    const auto front = pareto_front(p, set, 3);
    for (std::size_t a = 0; a < front.vectors.size(); ++a) {
      for (std::size_t b = 0; b < front.vectors.size(); ++b) {
        if (a != b) EXPECT_EQ(dominates(p, front.vectors[a], front.vectors[b]), Dominance::Incomparable);
      }
    }
    for (const auto& v : set.objectives) {
      bool dominated = false;
      for (const auto& w : set.objectives) dominated = dominated || dominates(p, w, v) == Dominance::FirstDominates;
      bool member = false;
      for (const auto& m : front.vectors) member = member || m == v;
      EXPECT_EQ(member, !dominated);
    }
    EXPECT_EQ(front.total_feasible, set.size());
  }
}

TEST(Front, MaskIsWorkerIndependent) {
  for (const Problem& p : random_corpus(29, 20)) {
    const auto set = sample_feasible(p, GridOptions{});
    const auto dirs = directions_of(p);
    EXPECT_EQ(non_dominated_mask(dirs, set.objectives, 1), non_dominated_mask(dirs, set.objectives, 5));
  }
}

TEST(Certify, Example1Candidates) {
  const GridOptions opts;
  EXPECT_TRUE(certify_non_dominated(example1_problem(), Point{{1, 1, 0}}, opts));
  EXPECT_FALSE(certify_non_dominated(example1_problem(), Point{{0, 0, 0}}, opts));
  EXPECT_TRUE(certify_non_dominated(example1_problem(), Point{{0.5, 0.5, 0.5}}, opts));
  EXPECT_THROW(certify_non_dominated(example1_problem(), Point{{1, 1, 1}}, opts), InvalidInput);
}

TEST(Theorem5, Example2AndSingleObjective) {
  const auto p = example2_problem();
  EXPECT_TRUE(verify_theorem5(p, compute_standards(p, GridOptions{}), GridOptions{}));
  const Problem one({{"x", Interval{-1, 2}}}, {{"F", parse_expr("x^2 - x"), Direction::Minimize}});
  EXPECT_TRUE(verify_theorem5(one, compute_standards(one, GridOptions{}), GridOptions{}));
}

TEST(Theorem5, NormalizationPreservesPairwiseDominance) {
  for (const Problem& p : random_corpus(31, 30)) {
    const auto set = sample_feasible(p, GridOptions{});
    const auto s = compute_standards(p, set, kDefaultFeasibilityTol);
    const NormalizedProblem n = normalize(p, s);
    for (std::size_t a = 0; a < set.size(); a += 3) {
      for (std::size_t b = 0; b < set.size(); b += 5) {
        EXPECT_EQ(dominates(p, set.objectives[a], set.objectives[b]),
                  dominates(p, n.normalize(set.objectives[a]), n.normalize(set.objectives[b])));
      }
    }
    EXPECT_TRUE(verify_theorem5(p, s, GridOptions{}));
  }
}

}  // namespace
}  // namespace mocs
