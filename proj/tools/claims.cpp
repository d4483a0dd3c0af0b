#include "claims.hpp"

#include <chrono>
#include <exception>

#include "claim_support.hpp"

namespace btcayley::cli {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::failed: return "failed";
    case ClaimStatus::skipped_budget: return "skipped-budget";
    case ClaimStatus::not_applicable: return "not-applicable";
  }
  return "failed";
}

Json ClaimReport::to_json(bool with_timing) const {
  Json out;
  out["claim"] = claim;
  out["n"] = n;
  out["status"] = to_string(status);
  out["details"] = details;
  if (counterexample) out["counterexample"] = *counterexample;
  if (with_timing) out["wall_time_ms"] = wall_time_ms;
  return out;
}

const std::vector<ClaimSpec>& claim_registry() {
  static const std::vector<ClaimSpec> registry = [] {
    std::vector<ClaimSpec> out;
    detail::register_algebra_claims(out);
    detail::register_graph_claims(out);
    detail::register_automorphism_claims(out);
    detail::register_map_claims(out);
    return out;
  }();
  return registry;
}

const ClaimSpec* find_claim(std::string_view key) {
  for (const auto& claim : claim_registry()) {
    if (claim.key == key) return &claim;
    for (const auto& alias : claim.aliases)
      if (alias == key) return &claim;
  }
  return nullptr;
}

ClaimReport run_claim(const ClaimSpec& claim, int n, const Budget& budget) {
  ClaimReport report;
  report.claim = claim.key;
  report.n = n;
  if (n < claim.min_n || n > claim.max_n) {
    report.status = ClaimStatus::not_applicable;
    report.details["reason"] = "claim is checked for " + std::to_string(claim.min_n) + " <= n <= " +
                               std::to_string(claim.max_n);
    return report;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome outcome = claim.run(n, budget);
    report.status = outcome.verified ? ClaimStatus::verified : ClaimStatus::failed;
    report.details = std::move(outcome.details);
    if (!outcome.verified) report.counterexample = std::move(outcome.counterexample);
  } catch (const BudgetExceeded& e) {
    report.status = ClaimStatus::skipped_budget;
    report.details["reason"] = e.what();
  } catch (const std::exception& e) {
    report.status = ClaimStatus::failed;
    report.counterexample = Json{{"exception", e.what()}};
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace btcayley::cli
