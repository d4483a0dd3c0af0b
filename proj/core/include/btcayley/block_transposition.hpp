#pragma once

// Block transpositions s(i,j,k) on [n]: right multiplication by s(i,j,k)
// swaps the adjacent blocks at positions i+1..j and j+1..k.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "btcayley/permutation.hpp"

namespace btcayley {

/// Cut points (i,j,k) with 0 <= i < j < k <= n.
class CutPoints {
 public:
  /// Throws std::invalid_argument when the ordering fails.
  CutPoints(int i, int j, int k, int n);

  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  int n() const { return n_; }

  friend bool operator==(const CutPoints&, const CutPoints&) = default;
  // Lexicographic on (i,j,k) within a degree; this is the canonical T_n order.
  friend std::strong_ordering operator<=>(const CutPoints& a, const CutPoints& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.i_ <=> b.i_; c != 0) return c;
    if (auto c = a.j_ <=> b.j_; c != 0) return c;
    return a.k_ <=> b.k_;
  }

 private:
  int i_, j_, k_, n_;
};

/// The four classes of T_n: powers of beta, prefix moves s(0,j,k) with k<n,
/// suffix moves s(i,j,n) with i>0, and interior moves fixing 1 and n.
enum class PartitionClass { B, L, F, S };

/// s(i,j,k) by block concatenation [1..i j+1..k i+1..j k+1..n].
Permutation make_bt(const CutPoints& c);

/// s(i,j,k) evaluated pointwise from the piecewise-linear formula.
Permutation make_bt_piecewise(const CutPoints& c);

/// s(i,j,k)^-1 = s(i, k-j+i, k).
CutPoints bt_inverse(const CutPoints& c);

/// s(i,i+1,k)^e = s(i,i+e,k); throws std::invalid_argument unless 1 <= e <= k-i-1.
CutPoints bt_power(int i, int k, int e, int n);

/// All of T_n in lexicographic (i,j,k) order, n(n+1)(n-1)/6 entries.
std::vector<CutPoints> enumerate_tn(int n);

/// Realizations of enumerate_tn(n), same order.
std::vector<Permutation> tn_permutations(int n);

PartitionClass classify(const CutPoints& c);

struct Recognition {
  enum class Kind { identity, block_transposition, none };
  Kind kind = Kind::none;
  std::optional<CutPoints> cut;  // engaged iff kind == block_transposition
};

/// Inverse of make_bt in O(n): reads the cut points off the ascent breaks.
Recognition recognize(const Permutation& pi);

/// Convenience: the cut points of pi if pi is in T_n.
std::optional<CutPoints> as_block_transposition(const Permutation& pi);

std::string to_string(const CutPoints& c);      // "s(i,j,k)"
std::string to_string(PartitionClass cls);      // "B" | "L" | "F" | "S"
std::string to_json(const CutPoints& c);        // {"i":..,"j":..,"k":..,"class":".."}

/// |T_n| = n(n+1)(n-1)/6.
long long tn_size(int n);

}  // namespace btcayley
