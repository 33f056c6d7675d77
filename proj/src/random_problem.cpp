#include "mocs/random_problem.hpp"

#include <algorithm>
#include <string>

#include "mocs/error.hpp"

namespace mocs {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

Expr add(Expr a, Expr b) { return Expr::binary(Expr::Kind::Add, std::move(a), std::move(b)); }
Expr mul(Expr a, Expr b) { return Expr::binary(Expr::Kind::Multiply, std::move(a), std::move(b)); }

Expr coefficient(int c) { return c < 0 ? Expr::negate(Expr::constant(-c)) : Expr::constant(c); }

Expr random_objective(std::mt19937_64& rng, const std::vector<std::string>& names) {
  std::vector<Expr> terms;
  for (const auto& n : names) {
    const int c = uniform(rng, -3, 3);
    if (c != 0) terms.push_back(mul(coefficient(c), Expr::variable(n)));
    if (chance(rng, 0.3)) {
      terms.push_back(mul(coefficient(uniform(rng, -2, 2)), Expr::power(Expr::variable(n), 2)));
    }
  }
  if (names.size() >= 2 && chance(rng, 0.25)) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1));
    const auto b = (a + 1) % names.size();
    terms.push_back(mul(Expr::variable(names[a]), Expr::variable(names[b])));
  }
  if (terms.empty()) terms.push_back(Expr::variable(names.front()));
  Expr e = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) e = add(e, terms[k]);
  return e;
}

std::vector<double> random_set(std::mt19937_64& rng, int max_size) {
  std::vector<double> pool;
  for (int k = -6; k <= 6; ++k) pool.push_back(0.5 * k);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(uniform(rng, 2, max_size)));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

Problem random_problem(std::mt19937_64& rng, const RandomProblemOptions& opts) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const int nvars = uniform(rng, opts.min_variables, opts.max_variables);
    std::vector<VariableDomain> variables;
    std::vector<std::string> names;
    for (int k = 0; k < nvars; ++k) {
      names.push_back("x" + std::to_string(k + 1));
      variables.push_back({names.back(), FiniteSet{random_set(rng, opts.max_set_size)}});
    }

    std::vector<Objective> objectives;
    const int nobj = uniform(rng, opts.min_objectives, opts.max_objectives);
    for (int i = 0; i < nobj; ++i) {
      objectives.push_back({"F" + std::to_string(i + 1), random_objective(rng, names),
                            chance(rng, 0.5) ? Direction::Maximize : Direction::Minimize});
    }

    // Right-hand sides come from a random grid point so that point stays feasible.
    std::vector<Constraint> constraints;
    const int ncons = uniform(rng, 0, 2);
    for (int j = 0; j < ncons; ++j) {
      Expr lhs;
      double rhs = 0.0;
      bool first = true;
      for (std::size_t k = 0; k < variables.size(); ++k) {
        const int a = uniform(rng, -2, 2);
        if (a == 0) continue;
        const auto& values = std::get<FiniteSet>(variables[k].kind).values;
        rhs += a * values[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(values.size()) - 1))];
        Expr term = mul(coefficient(a), Expr::variable(names[k]));
        lhs = first ? term : add(lhs, term);
        first = false;
      }
      if (first) continue;
      constraints.push_back({lhs, chance(rng, 0.5) ? Relation::LessEqual : Relation::GreaterEqual, rhs});
    }

    Problem p(std::move(variables), std::move(objectives), std::move(constraints));
    const FeasibleSet set = sample_feasible(p, GridOptions{});
    if (set.size() < opts.min_feasible || set.size() > opts.max_feasible) continue;
    bool constant = false;
    for (std::size_t i = 0; i < p.num_objectives() && !constant; ++i) {
      const double v0 = set.objectives.front()[i];
      constant = std::all_of(set.objectives.begin(), set.objectives.end(),
                             [&](const ObjectiveVector& f) { return f[i] == v0; });
    }
    if (constant) continue;
    return p;
  }
  throw InvalidInput("could not draw a random problem satisfying the requested limits");
}

std::vector<Problem> random_corpus(std::uint64_t seed, std::size_t count, const RandomProblemOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<Problem> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_problem(rng, opts));
  return out;
}

}  // namespace mocs
