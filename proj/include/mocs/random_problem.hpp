#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mocs/problem.hpp"

namespace mocs {

struct RandomProblemOptions {
  int min_objectives = 2;
  int max_objectives = 4;
  int min_variables = 2;
  int max_variables = 3;
  int max_set_size = 8;
  std::size_t min_feasible = 2;
  std::size_t max_feasible = 2000;
};

/// Small problem over finite-set variables (values are multiples of 0.5 in
/// [-3, 3]) with polynomial criteria of mixed direction and up to two
/// linear constraints. Draws until the feasible set has between
/// `min_feasible` and `max_feasible` points and no criterion is constant.
Problem random_problem(std::mt19937_64& rng, const RandomProblemOptions& opts = {});

std::vector<Problem> random_corpus(std::uint64_t seed, std::size_t count, const RandomProblemOptions& opts = {});

}  // namespace mocs
