#include "btcayley/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace btcayley {

namespace {

bool bt_adjacent(const Permutation& a, const Permutation& b) {
  return recognize(compose(inverse(a), b)).kind == Recognition::Kind::block_transposition;
}

}  // namespace

Graph gamma_subgraph(const std::vector<CutPoints>& vertices) {
  std::vector<Permutation> labels;
  labels.reserve(vertices.size());
  for (const auto& c : vertices) labels.push_back(make_bt(c));
  std::vector<std::vector<int>> adjacency(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (bt_adjacent(labels[a], labels[b])) {
        adjacency[a].push_back(static_cast<int>(b));
        adjacency[b].push_back(static_cast<int>(a));
      }
  return Graph(std::move(labels), std::move(adjacency));
}

Graph gamma_graph(int n) { return gamma_subgraph(enumerate_tn(n)); }

std::vector<bool> partition_mask(int n, PartitionClass cls) {
  std::vector<bool> mask;
  for (const auto& c : enumerate_tn(n)) mask.push_back(classify(c) == cls);
  return mask;
}

std::vector<std::array<CutPoints, 2>> distinguished_edges(int n) {
  if (n < 4) throw std::invalid_argument("distinguished edges e_m need n >= 4");
  std::vector<std::array<CutPoints, 2>> out;
  for (int l = 0; l <= n - 3; ++l)
    out.push_back({CutPoints(l, l + 1, l + 3, n), CutPoints(l, l + 2, l + 3, n)});
  out.push_back({CutPoints(0, n - 2, n - 1, n), CutPoints(0, n - 2, n, n)});
  out.push_back({CutPoints(1, n - 1, n, n), CutPoints(0, 1, n - 1, n)});
  out.push_back({CutPoints(0, 2, n, n), CutPoints(1, 2, n, n)});
  return out;
}

void tag_distinguished_edges(EdgeSet2Cliques& cliques, const Graph& gamma, int n) {
  const auto targets = distinguished_edges(n);
  for (auto& e : cliques.edges) {
    const auto a = as_block_transposition(gamma.label(e.u));
    const auto b = as_block_transposition(gamma.label(e.v));
    if (!a || !b) continue;
    for (std::size_t m = 0; m < targets.size(); ++m) {
      const auto& [x, y] = targets[m];
      if ((*a == x && *b == y) || (*a == y && *b == x)) {
        e.e_index = static_cast<int>(m);
        break;
      }
    }
  }
}

std::vector<CutPoints> vertex_set_v(int n) {
  std::vector<CutPoints> out;
  for (const auto& [a, b] : distinguished_edges(n)) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CutPoints> hamilton_cycle_gamma_v(int n) {
  if (n < 5) throw std::invalid_argument("the Hamilton cycle construction needs n >= 5");
  std::vector<CutPoints> cycle;
  for (int l = 0; l <= n - 4; ++l) {
    cycle.emplace_back(l, l + 2, l + 3, n);
    cycle.emplace_back(l, l + 1, l + 3, n);
  }
  // cycle now ends at v_1 = s(n-4,n-3,n-1); close through the other vertices.
  cycle.emplace_back(n - 3, n - 1, n, n);
  cycle.emplace_back(n - 3, n - 2, n, n);
  cycle.emplace_back(0, n - 2, n, n);
  cycle.emplace_back(0, n - 2, n - 1, n);
  cycle.emplace_back(0, 1, n - 1, n);
  cycle.emplace_back(1, n - 1, n, n);
  cycle.emplace_back(1, 2, n, n);
  cycle.emplace_back(0, 2, n, n);

  for (std::size_t a = 0; a < cycle.size(); ++a) {
    const auto& from = cycle[a];
    const auto& to = cycle[(a + 1) % cycle.size()];
    if (!bt_adjacent(make_bt(from), make_bt(to)))
      throw std::logic_error("Hamilton cycle construction broke at " + to_string(from) + " - " + to_string(to));
  }
  return cycle;
}

}  // namespace btcayley
