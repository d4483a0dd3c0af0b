#pragma once

// Subcommands of the btcayley tool. Each writes to `out` and returns the
// process exit code; usage problems are reported by throwing UsageError.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "btcayley/budget.hpp"

namespace btcayley::cli {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_budget = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Search allowance from --budget-ms, overridden by BTCAYLEY_BUDGET_MS.
/// Non-positive or absent means unlimited.
Budget make_budget(std::optional<long long> budget_ms);

struct EnumerateOptions {
  int n = 0;
  std::string what;  // tn | partition | toric-classes
  bool pretty = false;
};

struct VerifyOptions {
  std::string claim;  // a registered key, an alias, or "all"
  int n = 0;
  bool pretty = false;
  bool timing = false;
  std::optional<long long> budget_ms;
};

struct DistanceOptions {
  int n = 0;
  std::string source;
  std::string target;
  bool emit_path = false;
  bool pretty = false;
  std::optional<long long> budget_ms;
};

struct ExportOptions {
  int n = 0;
  std::string object;      // cayley | gamma | gamma-v | map-faces
  std::string format;      // edges | dot | json
  std::string map;         // octahedron | bar-f | bar-f-n; empty picks by n
  std::optional<long long> budget_ms;
};

int cmd_enumerate(const EnumerateOptions& options, std::ostream& out);
int cmd_verify(const VerifyOptions& options, std::ostream& out);
int cmd_distance(const DistanceOptions& options, std::ostream& out);
int cmd_export(const ExportOptions& options, std::ostream& out);

/// Claim keys with their aliases, n ranges and summaries.
int cmd_list_claims(bool pretty, std::ostream& out);

}  // namespace btcayley::cli
