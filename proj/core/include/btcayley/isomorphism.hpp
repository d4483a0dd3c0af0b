#pragma once

// Exact isomorphism search for small graphs: joint colour refinement of the
// two graphs followed by individualization and backtracking. Every answer is
// checked edge by edge, so refinement only prunes and never decides.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "btcayley/budget.hpp"
#include "btcayley/graph.hpp"

namespace btcayley {

struct SearchOptions {
  std::size_t max_vertices = 5000;
  Budget budget;
};

/// Calls `visit(mapping)` for every isomorphism a -> b found by the search,
/// where mapping[v] is the image of vertex v. The search stops early when
/// `visit` returns false. Every isomorphism is visited exactly once.
/// Throws BudgetExceeded / std::invalid_argument per the options.
void for_each_isomorphism(const Graph& a, const Graph& b, const SearchOptions& options,
                          const std::function<bool(const std::vector<int>&)>& visit);

/// An isomorphism a -> b if one exists.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b,
                                                  const SearchOptions& options = SearchOptions());

}  // namespace btcayley
