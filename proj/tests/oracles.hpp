#pragma once

// Independent reference implementations for the tests. Everything here works
// on plain std::vector<int> one-line forms (1-based values) and deliberately
// shares no code with the library beyond the conversion helpers at the end.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "btcayley/graph.hpp"
#include "btcayley/permutation.hpp"

namespace oracle {

using Line = std::vector<int>;

inline Line identity(int n) {
  Line p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline Line compose(const Line& p, const Line& q) {
  Line out(q.size());
  for (std::size_t t = 0; t < q.size(); ++t) out[t] = p[static_cast<std::size_t>(q[t] - 1)];
  return out;
}

inline Line inverse(const Line& p) {
  Line out(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) out[static_cast<std::size_t>(p[t] - 1)] = static_cast<int>(t) + 1;
  return out;
}

/// The block move on the string 1 2 ... n: cut after positions i, j, k and
/// swap the two middle pieces.
inline Line block_move(int i, int j, int k, int n) {
  const Line s = identity(n);
  Line out(s.begin(), s.begin() + i);
  out.insert(out.end(), s.begin() + j, s.begin() + k);
  out.insert(out.end(), s.begin() + i, s.begin() + j);
  out.insert(out.end(), s.begin() + k, s.end());
  return out;
}

inline std::vector<Line> all_block_moves(int n) {
  std::vector<Line> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(block_move(i, j, k, n));
  return out;
}

inline std::vector<Line> all_lines(int n) {
  std::vector<Line> out;
  Line p = identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Reads the circular sequence 0 pi_1 ... pi_n from position r and
/// renormalizes so that it starts with 0 again.
inline Line toric_f(const Line& p, int r) {
  const int n = static_cast<int>(p.size());
  Line circle{0};
  circle.insert(circle.end(), p.begin(), p.end());
  const int m = n + 1;
  r = ((r % m) + m) % m;
  const int shift = circle[static_cast<std::size_t>(r)];
  Line out;
  for (int t = 1; t <= n; ++t) out.push_back(((circle[static_cast<std::size_t>((r + t) % m)] - shift) % m + m) % m);
  return out;
}

inline Line reverse_g(const Line& p) {
  const int n = static_cast<int>(p.size());
  Line out;
  for (int t = 1; t <= n; ++t) out.push_back(n + 1 - p[static_cast<std::size_t>(n - t)]);
  return out;
}

inline Line bar_f(const Line& p, int r) { return inverse(toric_f(inverse(p), r)); }

/// Distances from the identity to every element of Sym_n by plain BFS.
inline std::map<Line, int> bfs_from_identity(int n) {
  const auto moves = all_block_moves(n);
  std::map<Line, int> dist{{identity(n), 0}};
  std::deque<Line> queue{identity(n)};
  while (!queue.empty()) {
    const Line u = queue.front();
    queue.pop_front();
    for (const auto& x : moves) {
      const Line v = compose(u, x);
      if (dist.emplace(v, dist[u] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

/// Adjacency over vertex indices 0..V-1.
using Adjacency = std::vector<std::set<int>>;

/// Every bijection f with u ~ v iff f(u) ~ f(v), by plain backtracking in
/// vertex order without any refinement.
inline void for_each_isomorphism(const Adjacency& a, const Adjacency& b,
                                 const std::function<void(const std::vector<int>&)>& visit) {
  const int size = static_cast<int>(a.size());
  if (b.size() != a.size()) return;
  std::vector<int> image(static_cast<std::size_t>(size), -1);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  std::function<void(int)> extend = [&](int v) {
    if (v == size) {
      visit(image);
      return;
    }
    for (int w = 0; w < size; ++w) {
      if (used[static_cast<std::size_t>(w)] || a[static_cast<std::size_t>(v)].size() != b[static_cast<std::size_t>(w)].size())
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = a[static_cast<std::size_t>(v)].contains(u) == b[static_cast<std::size_t>(w)].contains(image[static_cast<std::size_t>(u)]);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      extend(v + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
    image[static_cast<std::size_t>(v)] = -1;
  };
  extend(0);
}

inline std::size_t count_automorphisms(const Adjacency& a) {
  std::size_t count = 0;
  for_each_isomorphism(a, a, [&](const std::vector<int>&) { ++count; });
  return count;
}

/// Edges contained in no triangle, as sorted pairs.
inline std::set<std::pair<int, int>> triangle_free_edges(const Adjacency& a) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(a.size()); ++u)
    for (int v : a[static_cast<std::size_t>(u)]) {
      if (v < u) continue;
      bool common = false;
      for (int w : a[static_cast<std::size_t>(u)]) common = common || a[static_cast<std::size_t>(v)].contains(w);
      if (!common) out.emplace(u, v);
    }
  return out;
}

/// Face tracing with darts as ordered vertex pairs: from dart (u, v) the
/// next dart leaves v along the neighbour following u in v's rotation.
/// Returns the face lengths, sorted.
inline std::vector<std::size_t> face_lengths(int n, const std::vector<Line>& rotation) {
  std::map<std::pair<Line, Line>, bool> seen;
  std::vector<std::size_t> lengths;
  const auto position = [&](const Line& from, const Line& to) {
    const Line x = compose(inverse(from), to);
    return static_cast<std::size_t>(std::find(rotation.begin(), rotation.end(), x) - rotation.begin());
  };
  for (const auto& g : all_lines(n))
    for (const auto& x : rotation) {
      std::pair<Line, Line> dart{g, compose(g, x)};
      if (seen.contains(dart)) continue;
      std::size_t length = 0;
      while (!seen.contains(dart)) {
        seen[dart] = true;
        ++length;
        const auto& [u, v] = dart;
        const std::size_t back = position(v, u);
        dart = {v, compose(v, rotation[(back + 1) % rotation.size()])};
      }
      lengths.push_back(length);
    }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

/// Number of bijections of the darts commuting with R and T; the map is
/// regular iff this equals the dart count. A dart is (g, index into X).
inline std::size_t map_automorphism_count(int n, const std::vector<Line>& rotation) {
  using Dart = std::pair<Line, std::size_t>;
  const std::size_t valency = rotation.size();
  std::vector<std::size_t> inverse_index(valency);
  for (std::size_t s = 0; s < valency; ++s)
    inverse_index[s] = static_cast<std::size_t>(
        std::find(rotation.begin(), rotation.end(), inverse(rotation[s])) - rotation.begin());
  const auto rot = [&](const Dart& d) { return Dart{d.first, (d.second + 1) % valency}; };
  const auto rev = [&](const Dart& d) { return Dart{compose(d.first, rotation[d.second]), inverse_index[d.second]}; };
  const auto vertices = all_lines(n);
  const Dart start{identity(n), 0};
  std::size_t count = 0;
  for (const auto& g : vertices)
    for (std::size_t s = 0; s < valency; ++s) {
      std::map<Dart, Dart> image{{start, Dart{g, s}}};
      std::set<Dart> used{Dart{g, s}};
      std::deque<Dart> queue{start};
      bool ok = true;
      while (ok && !queue.empty()) {
        const Dart d = queue.front();
        queue.pop_front();
        for (int step = 0; step < 2 && ok; ++step) {
          const Dart next = step == 0 ? rot(d) : rev(d);
          const Dart want = step == 0 ? rot(image[d]) : rev(image[d]);
          if (const auto it = image.find(next); it != image.end()) {
            ok = it->second == want;
          } else {
            ok = used.insert(want).second;
            image.emplace(next, want);
            queue.push_back(next);
          }
        }
      }
      count += ok;
    }
  return count;
}

// Conversions to and from the library types.

inline Line line(const btcayley::Permutation& p) { return p.one_line(); }
inline btcayley::Permutation perm(const Line& p) { return btcayley::Permutation::from_one_line(p); }

inline Adjacency adjacency(const btcayley::Graph& g) {
  Adjacency out(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v)) out[static_cast<std::size_t>(v)].insert(w);
  return out;
}

/// The subgraph of Cay(Sym_n, T_n) induced on T_n, indexed in the order of
/// all_block_moves.
inline Adjacency gamma(int n) {
  const auto moves = all_block_moves(n);
  const std::set<Line> t(moves.begin(), moves.end());
  Adjacency out(moves.size());
  for (std::size_t a = 0; a < moves.size(); ++a)
    for (std::size_t b = 0; b < moves.size(); ++b)
      if (a != b && t.contains(compose(inverse(moves[a]), moves[b]))) out[a].insert(static_cast<int>(b));
  return out;
}

}  // namespace oracle
