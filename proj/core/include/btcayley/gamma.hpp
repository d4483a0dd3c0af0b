#pragma once

// The block transposition graph Gamma: the subgraph of Cay(Sym_n, T_n)
// induced on T_n, together with its distinguished maximal 2-cliques e_m
// (m = 0..n), their vertex set V and the Hamilton cycle of Gamma(V).

#include <array>
#include <vector>

#include "btcayley/block_transposition.hpp"
#include "btcayley/graph.hpp"

namespace btcayley {

/// Gamma with vertices in canonical T_n order, built without materializing
/// Sym_n: s ~ t iff s^-1 o t is a block transposition.
Graph gamma_graph(int n);

/// Gamma restricted to the given cut points, vertices in the given order.
Graph gamma_subgraph(const std::vector<CutPoints>& vertices);

/// Vertex mask over gamma_graph(n) selecting one partition class.
std::vector<bool> partition_mask(int n, PartitionClass cls);

/// e_0..e_n: e_l = {s(l,l+1,l+3), s(l,l+2,l+3)} for l <= n-3, then
/// e_{n-2} = {s(0,n-2,n-1), s(0,n-2,n)}, e_{n-1} = {s(1,n-1,n), s(0,1,n-1)},
/// e_n = {s(0,2,n), s(1,2,n)}. Requires n >= 4.
std::vector<std::array<CutPoints, 2>> distinguished_edges(int n);

/// Tags each edge of `cliques` (over gamma_graph(n)) with its e_m index.
void tag_distinguished_edges(EdgeSet2Cliques& cliques, const Graph& gamma, int n);

/// Endpoints of all e_m, deduplicated, in canonical order. 2(n+1) of them for n >= 5.
std::vector<CutPoints> vertex_set_v(int n);

/// Hamilton cycle of Gamma(V) for n >= 5: the path through the Lambda edges
/// from s(0,2,3) to s(n-4,n-3,n-1), then back through the remaining vertices.
/// Throws std::logic_error if a consecutive pair is not adjacent in Gamma.
std::vector<CutPoints> hamilton_cycle_gamma_v(int n);

}  // namespace btcayley
