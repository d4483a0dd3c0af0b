#pragma once

// Vertex maps of labelled graphs, automorphism groups of small graphs, the
// stabilizer of the identity in Aut(Cay(Sym_n, T_n)), subgroup closures and
// dihedral orbits.

#include <compare>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "btcayley/budget.hpp"
#include "btcayley/graph.hpp"
#include "btcayley/isomorphism.hpp"
#include "btcayley/permutation.hpp"
#include "btcayley/toric.hpp"

namespace btcayley {

/// A bijection of the vertex indices of some graph.
class VertexMap {
 public:
  /// Throws std::invalid_argument unless images is a bijection of [0, size).
  explicit VertexMap(std::vector<int> images);
  static VertexMap identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend auto operator<=>(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<int> images_;
};

/// (a o b)(v) = a(b(v)).
VertexMap compose(const VertexMap& a, const VertexMap& b);
VertexMap inverse(const VertexMap& m);

/// The vertex map induced by a map on labels; throws std::invalid_argument
/// if some image is not a vertex of g.
VertexMap vertex_map_from(const Graph& g, const std::function<Permutation(const Permutation&)>& f);

/// L_h: pi -> h o pi on a graph labelled by Sym_n.
VertexMap left_translation(const Graph& g, const Permutation& h);

/// The maps apply_dihedral(d, .) for every d in D_{n+1}, as vertex maps of g
/// (whose labels must be invariant under D_{n+1}), in dihedral_group order.
std::vector<VertexMap> dihedral_vertex_maps(const Graph& g, int n);

bool is_automorphism(const Graph& g, const VertexMap& m);

/// The full automorphism group by exact search, sorted.
std::vector<VertexMap> aut_group(const Graph& g, const SearchOptions& options = SearchOptions());

/// All automorphisms of Cay(Sym_n, T_n) (as built by build_cayley) that fix
/// the identity. Local maps are drawn from Aut(Gamma) and propagated from the
/// identity outwards; every result is verified. Sorted.
std::vector<VertexMap> stabilizer_of_identity(int n, const Budget& budget = Budget());

/// The subgroup of Sym_n generated by a set of permutations.
class GeneratedSubgroup {
 public:
  static constexpr std::uint64_t kMaxSize = 3628800;  // 10!

  /// Breadth-first closure; throws std::invalid_argument if the closure
  /// exceeds kMaxSize and BudgetExceeded if the budget runs out.
  GeneratedSubgroup(int n, const std::vector<Permutation>& generators, const Budget& budget = Budget());

  int degree() const { return n_; }
  std::uint64_t size() const { return members_.size(); }
  bool contains(const Permutation& pi) const;

 private:
  int n_;
  std::unordered_set<std::uint64_t> members_;
};

/// Closure of seed under the given dihedral maps, sorted.
std::vector<Permutation> orbit(const std::vector<DihedralElement>& generators, const Permutation& seed);

/// t = L_w o g, which sends pi to pi o w.
Permutation translation_t(const Permutation& pi);

}  // namespace btcayley
