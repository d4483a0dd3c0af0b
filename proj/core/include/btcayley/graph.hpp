#pragma once

// Immutable simple undirected graphs with permutation vertex labels, Cayley
// graph construction on Sym_n and generic structural queries.

#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "btcayley/permutation.hpp"

namespace btcayley {

class Graph {
 public:
  /// Throws std::invalid_argument on loops, multi-edges, asymmetric
  /// adjacency or repeated labels. Adjacency lists are sorted on entry.
  Graph(std::vector<Permutation> labels, std::vector<std::vector<int>> adjacency);

  /// A graph without vertex labels (abstract test graphs).
  static Graph unlabeled(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;

  bool has_labels() const { return !labels_.empty(); }
  const Permutation& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const Permutation> labels() const { return labels_; }
  std::optional<int> index_of(const Permutation& pi) const;

  /// All edges (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<Permutation> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<Permutation, int> index_;
  bool rank_indexed_ = false;  // labels_[r] has lexicographic rank r
  std::size_t edge_count_ = 0;
};

/// Cay(Sym_n, X): vertex r is the permutation of rank r, pi ~ pi o x.
/// Throws std::invalid_argument if X contains the identity, repeats an
/// element, has the wrong degree or is not inverse-closed.
Graph build_cayley(int n, const std::vector<Permutation>& generators);

/// Induced subgraph on W, vertices in W's order. Throws on unknown labels.
Graph induced_subgraph(const Graph& g, const std::vector<Permutation>& w);

Graph complete_graph(int k);
Graph cycle_graph(int k);

/// degree -> number of vertices with that degree.
std::map<int, int> degree_profile(const Graph& g);

/// Number of neighbours of v inside the vertex set `members` (a mask).
int neighbors_in(const Graph& g, int v, const std::vector<bool>& members);

/// Edges whose endpoints have no common neighbour, optionally tagged with the
/// index m of the distinguished edge e_m they match.
struct EdgeSet2Cliques {
  struct Edge {
    int u = 0;
    int v = 0;
    std::optional<int> e_index;
  };
  std::vector<Edge> edges;
};

EdgeSet2Cliques maximal_2_cliques(const Graph& g);

/// Number of maximal-2-clique edges at each vertex.
std::vector<int> maximal_2_clique_incidence(const Graph& g);

/// Vertices of the connected component containing v.
std::vector<int> component_of(const Graph& g, int v);

}  // namespace btcayley
