#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mocs/circuits.hpp"
#include "mocs/scalarize.hpp"
#include "mocs/solver.hpp"

namespace mocs::cli {

enum class Command { Standards, Solve, Front, Verify, Circuits, Build };
enum class OutputFormat { Text, Json };

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kInfeasible = 3,
  kCapExceeded = 4,
  kCertificationFailed = 5,
  kEvaluationError = 6,
  kInvalidInput = 7,
};

/// Environment variable that replaces the default grid cap.
inline constexpr const char* kGridCapEnv = "MOCS_GRID_CAP";

struct RunConfig {
  Command command = Command::Solve;
  /// Problem file, graph file, or a built-in name (example1, example2,
  /// figure2). Empty for `verify --random` runs without a problem.
  std::string input;

  int resolution = 10;
  int refine_rounds = 2;
  double feasibility_tol = kDefaultFeasibilityTol;
  double tie_tol = kDefaultTieTol;
  double stage_tol = kDefaultTieTol;
  std::uint64_t grid_cap = kDefaultGridCap;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::Text;

  // solve
  Scalarization method = Scalarization::GammaMin;
  bool squared = false;
  bool normalized = false;
  std::optional<LexOrder> lex;
  bool certify = false;
  std::optional<std::vector<double>> ideal;
  std::optional<std::vector<double>> anti_ideal;

  // verify
  std::size_t random_count = 0;
  std::uint64_t seed = 1;

  // circuits / build
  CirculationObjectives::Kind objectives = CirculationObjectives::Kind::PerCircuit;
  Relation arc_relation = Relation::LessEqual;
  std::size_t circuit_cap = kDefaultCircuitCap;
};

/// Executes one subcommand, writing the report to `out` and a one-line
/// diagnostic to `err` on failure. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments and runs. Returns an ExitCode.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mocs::cli
