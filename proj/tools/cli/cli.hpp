#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qps/filtration.hpp"
#include "report.hpp"

namespace qps::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitCap = 3,
  kExitMismatch = 4,
};

enum class WeightKind {
  kDefault,    ///< weights from the graph file if it has any, else unit
  kFromFile,   ///< weights from the graph file (required)
  kUnit,
  kHecke,      ///< all equal to `value`
  kSample,     ///< independent generic weight per edge, drawn with `seed`
  kPartition,  ///< generic weight per class of `partition`, drawn with the global seed
};

struct WeightPolicy {
  WeightKind kind = WeightKind::kDefault;
  Rational value{1};
  std::uint64_t seed = 0;
  std::string partition;

  /// "from-file" | "file" | "unit" | "hecke:Q" | "sample:SEED" | "partition:SPEC"
  static WeightPolicy parse(const std::string& text);
  std::string to_string() const;
};

enum class Regime { kHecke, kOneOff, kGeneric };

struct RunConfig {
  std::string command;
  std::string input;

  std::string mode = "external";  ///< external|trees|internal, or all|root:G|strong for census
  std::optional<std::size_t> root;  ///< 1-based
  std::string variant = "external";
  std::string method = "filtration";  ///< filtration|score|both
  WeightPolicy weights;
  FieldSpec field;
  RationalEngine engine = RationalEngine::kAuto;
  std::optional<std::uint32_t> prepass;  ///< prime for a modular run checked against the main run
  std::uint64_t seed = 0;
  std::size_t max_edges = kDefaultMaxEdges;
  OutputFormat format = OutputFormat::kPlain;
  bool experimental_zero_q = false;

  std::string t;          ///< annihilator: "t1,...,tn"
  std::string q = "1";    ///< verify-hecke
  std::string partition;  ///< product-oracle
  bool verify = false;
  bool vectors = false;   ///< census: list the distinct vectors

  std::size_t complete = 0;  ///< tables: a single K_n
  std::size_t max_n = 5;     ///< tables: K_2 .. K_max_n
  Regime regime = Regime::kHecke;

  /// Throws InvalidInput on contradictory or out-of-range settings.
  void validate() const;
};

struct RunResult {
  int exit_code = kExitOk;
  Report report;
  std::string error;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"tutte",         "hilbert", "hilbert-filtration", "dim",
                                              "census",        "annihilator", "verify-hecke",   "check-forests",
                                              "product-oracle", "tables"};
  return names;
}

/// Executes one command. Errors are reported through the exit code, never thrown.
RunResult run(const RunConfig& config);

/// Hilbert polynomial of the algebra for K_n with the regime's weights.
struct TableRow {
  std::size_t n = 0;
  FiltrationResult result;
  WeightAssignment weights;
};
TableRow table_row(std::size_t n, Regime regime, std::uint64_t seed, const FiltrationOptions& options = {},
                   EdgeIndex distinguished = static_cast<EdgeIndex>(-1));

/// Parses argv into a config; returns the CLI11 exit code through `exit_code` when the
/// arguments do not describe a run (help, usage error).
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, int& exit_code, std::string& message);

}  // namespace qps::cli
