#pragma once

// Helpers shared by the claim implementations.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "btcayley/block_transposition.hpp"
#include "btcayley/permutation.hpp"
#include "claims.hpp"

namespace btcayley::cli::detail {

inline ClaimOutcome failure(Json counterexample, Json details = Json::object()) {
  ClaimOutcome out;
  out.verified = false;
  out.details = std::move(details);
  out.counterexample = std::move(counterexample);
  return out;
}

inline ClaimOutcome success(Json details) {
  ClaimOutcome out;
  out.details = std::move(details);
  return out;
}

inline Json name(const Permutation& pi) { return to_string(pi); }
inline Json name(const CutPoints& c) { return to_string(c); }

/// Seeded so every run of a claim checks the same sample.
inline std::vector<Permutation> random_permutations(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32));
  std::vector<int> line(static_cast<std::size_t>(n));
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    for (int t = 0; t < n; ++t) line[static_cast<std::size_t>(t)] = t + 1;
    std::shuffle(line.begin(), line.end(), rng);
    out.push_back(Permutation::from_one_line(line));
  }
  return out;
}

/// All of Sym_n up to `exhaustive_max`, else a seeded sample.
inline std::vector<Permutation> test_permutations(int n, int exhaustive_max, std::size_t samples, std::uint64_t seed) {
  return n <= exhaustive_max ? all_permutations(n) : random_permutations(n, samples, seed);
}

inline const char* coverage(int n, int exhaustive_max) { return n <= exhaustive_max ? "exhaustive" : "sampled"; }

/// Index of c in enumerate_tn order.
inline int tn_index(const std::vector<CutPoints>& tn, const CutPoints& c) {
  const auto it = std::lower_bound(tn.begin(), tn.end(), c);
  return it != tn.end() && *it == c ? static_cast<int>(it - tn.begin()) : -1;
}

void register_algebra_claims(std::vector<ClaimSpec>& out);
void register_graph_claims(std::vector<ClaimSpec>& out);
void register_automorphism_claims(std::vector<ClaimSpec>& out);
void register_map_claims(std::vector<ClaimSpec>& out);

}  // namespace btcayley::cli::detail
