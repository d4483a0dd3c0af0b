#pragma once

#include <vector>

#include "btcayley/block_transposition.hpp"
#include "btcayley/budget.hpp"
#include "btcayley/permutation.hpp"

namespace btcayley {

/// One shortest path in Cay(Sym_n, T_n). path.front() = source,
/// path.back() = target, and path[s+1] = path[s] o make_bt(moves[s]).
struct Geodesic {
  int distance = 0;
  std::vector<Permutation> path;
  std::vector<CutPoints> moves;
};

/// Block transposition distance by bidirectional BFS; neighbours are generated
/// on demand so Sym_n is never materialized. Throws std::invalid_argument on
/// degree mismatch and BudgetExceeded when the budget runs out.
Geodesic bfs_distance(const Permutation& source, const Permutation& target, const Budget& budget = Budget());

}  // namespace btcayley
