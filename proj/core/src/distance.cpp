#include "btcayley/distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace btcayley {

namespace {

struct Visit {
  std::uint64_t parent;
  int depth;
};

using VisitMap = std::unordered_map<std::uint64_t, Visit>;

constexpr std::uint64_t kNoParent = std::numeric_limits<std::uint64_t>::max();

// Expands one full layer of `side`; returns the best meeting key with the
// other side, if any.
std::optional<std::uint64_t> expand_layer(std::vector<std::uint64_t>& frontier, VisitMap& side, const VisitMap& other,
                                          const std::vector<Permutation>& moves, int n, int& best,
                                          const Budget& budget) {
  std::vector<std::uint64_t> next;
  std::optional<std::uint64_t> meet;
  std::size_t steps = 0;
  for (const auto key : frontier) {
    const Permutation pi = Permutation::unpack(key, n);
    const int depth = side.at(key).depth + 1;
    for (const auto& sigma : moves) {
      if ((++steps & 0xFFFF) == 0) budget.check("bfs_distance");
      const std::uint64_t child = compose(pi, sigma).pack();
      if (side.contains(child)) continue;
      side.emplace(child, Visit{key, depth});
      next.push_back(child);
      if (const auto it = other.find(child); it != other.end() && depth + it->second.depth < best) {
        best = depth + it->second.depth;
        meet = child;
      }
    }
  }
  frontier.swap(next);
  return meet;
}

std::vector<Permutation> chain_to_root(std::uint64_t key, const VisitMap& side, int n) {
  std::vector<Permutation> out;
  for (std::uint64_t k = key; k != kNoParent; k = side.at(k).parent) out.push_back(Permutation::unpack(k, n));
  return out;
}

}  // namespace

Geodesic bfs_distance(const Permutation& source, const Permutation& target, const Budget& budget) {
  const int n = source.degree();
  if (target.degree() != n) throw std::invalid_argument("bfs_distance: degree mismatch");
  Geodesic out;
  if (source == target) {
    out.path = {source};
    return out;
  }

  // T_n is inverse-closed, so the same generators serve both directions.
  const auto moves = tn_permutations(n);
  VisitMap forward{{source.pack(), Visit{kNoParent, 0}}};
  VisitMap backward{{target.pack(), Visit{kNoParent, 0}}};
  std::vector<std::uint64_t> front_f{source.pack()};
  std::vector<std::uint64_t> front_b{target.pack()};

  int best = std::numeric_limits<int>::max();
  std::optional<std::uint64_t> meet;
  while (!meet) {
    if (front_f.empty() || front_b.empty()) throw std::logic_error("bfs_distance: T_n failed to connect Sym_n");
    if (front_f.size() <= front_b.size())
      meet = expand_layer(front_f, forward, backward, moves, n, best, budget);
    else
      meet = expand_layer(front_b, backward, forward, moves, n, best, budget);
  }

  auto head = chain_to_root(*meet, forward, n);  // meet ... source
  std::reverse(head.begin(), head.end());
  const auto tail = chain_to_root(*meet, backward, n);  // meet ... target
  out.path = std::move(head);
  out.path.insert(out.path.end(), tail.begin() + 1, tail.end());
  out.distance = static_cast<int>(out.path.size()) - 1;
  for (std::size_t s = 0; s + 1 < out.path.size(); ++s) {
    const auto cut = as_block_transposition(compose(inverse(out.path[s]), out.path[s + 1]));
    if (!cut) throw std::logic_error("bfs_distance: path step is not a block transposition");
    out.moves.push_back(*cut);
  }
  return out;
}

}  // namespace btcayley
