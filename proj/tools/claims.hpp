#pragma once

// Registry of checkable claims. Each claim runs an exhaustive (or, where
// marked, seeded-sample) computation for one degree n and reports a status
// with a concrete counterexample on failure.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btcayley/budget.hpp"
#include "json.hpp"

namespace btcayley::cli {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { verified, failed, skipped_budget, not_applicable };

std::string to_string(ClaimStatus status);

struct ClaimOutcome {
  bool verified = true;
  Json details = Json::object();
  Json counterexample;  // set whenever verified is false
};

struct ClaimSpec {
  std::string key;
  std::vector<std::string> aliases;
  std::string summary;
  int min_n = 2;
  int max_n = 10;
  std::function<ClaimOutcome(int n, const Budget& budget)> run;
};

struct ClaimReport {
  std::string claim;
  int n = 0;
  ClaimStatus status = ClaimStatus::not_applicable;
  Json details = Json::object();
  std::optional<Json> counterexample;
  double wall_time_ms = 0;

  Json to_json(bool with_timing) const;
};

/// All claims in report order.
const std::vector<ClaimSpec>& claim_registry();

/// Looks a claim up by key or alias.
const ClaimSpec* find_claim(std::string_view key);

/// Runs one claim; out-of-range n gives not_applicable, BudgetExceeded gives
/// skipped_budget.
ClaimReport run_claim(const ClaimSpec& claim, int n, const Budget& budget);

}  // namespace btcayley::cli
