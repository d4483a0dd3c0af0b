#include "btcayley/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace btcayley {

Graph::Graph(std::vector<Permutation> labels, std::vector<std::vector<int>> adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  const int count = static_cast<int>(adjacency_.size());
  if (!labels_.empty() && labels_.size() != adjacency_.size())
    throw std::invalid_argument("label table and adjacency differ in size");
  for (int v = 0; v < count; ++v) {
    auto& list = adjacency_[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("multi-edge at vertex " + std::to_string(v));
    for (int u : list) {
      if (u < 0 || u >= count) throw std::invalid_argument("neighbour index out of range");
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    }
    edge_count_ += list.size();
  }
  for (int v = 0; v < count; ++v)
    for (int u : adjacency_[static_cast<std::size_t>(v)])
      if (!std::binary_search(adjacency_[static_cast<std::size_t>(u)].begin(),
                              adjacency_[static_cast<std::size_t>(u)].end(), v))
        throw std::invalid_argument("adjacency is not symmetric");
  edge_count_ /= 2;

  rank_indexed_ = !labels_.empty();
  for (std::size_t v = 0; v < labels_.size() && rank_indexed_; ++v) rank_indexed_ = labels_[v].rank() == v;
  if (rank_indexed_ && labels_.size() != factorial(labels_.front().degree())) rank_indexed_ = false;
  if (!rank_indexed_) {
    index_.reserve(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v)
      if (!index_.emplace(labels_[v], static_cast<int>(v)).second)
        throw std::invalid_argument("repeated vertex label " + to_string(labels_[v]));
  }
}

Graph Graph::unlabeled(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(vertex_count));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge out of range");
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  return Graph({}, std::move(adjacency));
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<int> Graph::index_of(const Permutation& pi) const {
  if (labels_.empty()) return std::nullopt;
  if (rank_indexed_) {
    if (pi.degree() != labels_.front().degree()) return std::nullopt;
    return static_cast<int>(pi.rank());
  }
  const auto it = index_.find(pi);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_cayley(int n, const std::vector<Permutation>& generators) {
  std::set<Permutation> seen;
  for (const auto& x : generators) {
    if (x.degree() != n) throw std::invalid_argument("generator " + to_string(x) + " has the wrong degree");
    if (x.is_identity()) throw std::invalid_argument("connection set contains the identity");
    if (!seen.insert(x).second) throw std::invalid_argument("repeated generator " + to_string(x));
  }
  for (const auto& x : generators)
    if (!seen.contains(inverse(x)))
      throw std::invalid_argument("connection set is not inverse-closed: missing inverse of " + to_string(x));

  auto labels = all_permutations(n);
  std::vector<std::vector<int>> adjacency(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto& list = adjacency[v];
    list.reserve(generators.size());
    for (const auto& x : generators) list.push_back(static_cast<int>(compose(labels[v], x).rank()));
  }
  return Graph(std::move(labels), std::move(adjacency));
}

Graph induced_subgraph(const Graph& g, const std::vector<Permutation>& w) {
  std::vector<int> original;
  original.reserve(w.size());
  for (const auto& pi : w) {
    const auto idx = g.index_of(pi);
    if (!idx) throw std::invalid_argument("induced_subgraph: unknown vertex " + to_string(pi));
    original.push_back(*idx);
  }
  std::unordered_map<int, int> local;
  for (std::size_t a = 0; a < original.size(); ++a) local.emplace(original[a], static_cast<int>(a));
  std::vector<std::vector<int>> adjacency(w.size());
  for (std::size_t a = 0; a < original.size(); ++a)
    for (int u : g.neighbors(original[a]))
      if (const auto it = local.find(u); it != local.end()) adjacency[a].push_back(it->second);
  return Graph(w, std::move(adjacency));
}

Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph::unlabeled(k, edges);
}

Graph cycle_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u) edges.emplace_back(u, (u + 1) % k);
  return Graph::unlabeled(k, edges);
}

std::map<int, int> degree_profile(const Graph& g) {
  std::map<int, int> out;
  for (int v = 0; v < g.vertex_count(); ++v) ++out[g.degree(v)];
  return out;
}

int neighbors_in(const Graph& g, int v, const std::vector<bool>& members) {
  int count = 0;
  for (int u : g.neighbors(v))
    if (members[static_cast<std::size_t>(u)]) ++count;
  return count;
}

namespace {

bool share_neighbor(const Graph& g, int u, int v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return false;
}

}  // namespace

EdgeSet2Cliques maximal_2_cliques(const Graph& g) {
  EdgeSet2Cliques out;
  for (auto [u, v] : g.edges())
    if (!share_neighbor(g, u, v)) out.edges.push_back({u, v, std::nullopt});
  return out;
}

std::vector<int> maximal_2_clique_incidence(const Graph& g) {
  std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : maximal_2_cliques(g).edges) {
    ++count[static_cast<std::size_t>(e.u)];
    ++count[static_cast<std::size_t>(e.v)];
  }
  return count;
}

std::vector<int> component_of(const Graph& g, int v) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> out{v};
  seen[static_cast<std::size_t>(v)] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int u : g.neighbors(out[head]))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        out.push_back(u);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace btcayley
