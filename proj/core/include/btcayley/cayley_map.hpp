#pragma once

// Cayley maps CM(Sym_n, X, p) with the rotation p given by the order of X.
// A dart (g, g o x) is stored as (rank of g, index of x in X), so the
// rotation is index arithmetic.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btcayley/budget.hpp"
#include "btcayley/permutation.hpp"
#include "btcayley/skew_morphism.hpp"

namespace btcayley {

class CayleyMap {
 public:
  /// Largest degree accepted; the dart table has n! |X| entries.
  static constexpr int kMaxDegree = 7;

  /// Throws std::invalid_argument unless X has one degree, is inverse-closed,
  /// avoids the identity, has no repeats and generates Sym_n.
  CayleyMap(int n, std::vector<Permutation> rotation);

  int degree() const { return n_; }
  int valency() const { return static_cast<int>(x_.size()); }
  const std::vector<Permutation>& generators() const { return x_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t dart_count() const { return vertex_count_ * x_.size(); }

  /// Index of x in X; throws std::invalid_argument if x is not in X.
  int index_of(const Permutation& x) const;
  int inverse_index(int s) const { return inverse_[static_cast<std::size_t>(s)]; }
  int next_index(int s) const { return (s + 1) % valency(); }

  /// rank(g o x_s) for g of rank `from`.
  std::uint64_t step(std::uint64_t from, int s) const {
    return step_[from * x_.size() + static_cast<std::size_t>(s)];
  }

 private:
  int n_;
  std::vector<Permutation> x_;
  std::vector<int> inverse_;
  std::uint64_t vertex_count_;
  std::vector<std::uint64_t> step_;
};

struct Dart {
  std::uint64_t from = 0;  // rank of g
  int gen = 0;             // index of x in X

  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// R(g, x) = (g, p(x)). Throws std::invalid_argument if gen is out of range.
Dart rotation_R(const CayleyMap& m, const Dart& d);

/// T(g, x) = (g o x, x^-1): the same edge traversed backwards.
Dart reverse_T(const CayleyMap& m, const Dart& d);

/// One orbit of R o T, starting at its smallest dart.
struct Face {
  std::vector<Dart> darts;
  /// Ranks of the vertices met along the face.
  std::vector<std::uint64_t> vertex_walk() const;
};

/// All faces, sorted by first dart.
std::vector<Face> faces(const CayleyMap& m);

/// The face through a given dart, rotated to start at that dart.
Face face_through(const CayleyMap& m, const Dart& d);

/// face size -> number of faces.
std::map<std::size_t, std::size_t> face_size_histogram(const std::vector<Face>& faces);

/// V - E + F.
long long euler_characteristic(const CayleyMap& m, const std::vector<Face>& faces);

struct RegularityResult {
  enum class Status { regular, not_regular, inconclusive };
  Status status = Status::inconclusive;
  std::optional<SkewMorphismWitness> witness;
  /// The exponent r when the skew-morphism is bar-f_r.
  std::optional<int> bar_f_exponent;
  std::uint64_t aut_order = 0;  // n! * order(psi) when regular
  std::string detail;
};

std::string to_string(RegularityResult::Status status);

/// Decides regularity. The maps bar-f_r are tried first; otherwise the unique
/// map automorphism fixing the identity and sending (1, x_0) to (1, p(x_0))
/// is propagated along R and T, and regularity holds iff it exists. The
/// witness over Sym_n is only built for n <= 6 (inconclusive above that).
RegularityResult is_regular(const CayleyMap& m, const Budget& budget = Budget());

/// The common value of the power function on X, if there is one.
std::optional<int> t_balance(const SkewMorphismWitness& witness, const CayleyMap& m);

/// Power function value at a permutation (rank index into the witness).
int power_at(const SkewMorphismWitness& witness, const Permutation& pi);

/// p = (s(0,1,3), s(0,2,3), s(1,2,3), s(0,1,2)) on Sym_3.
CayleyMap octahedron_map();

/// X = {s(0,1,n), s(0,n-1,n), s(i,i+1,i+2)}, p = (s(0,1,n), s(0,n-1,n),
/// s(n-2,n-1,n), ..., s(0,1,2)). Requires 3 <= n <= kMaxDegree.
CayleyMap bar_f_map(int n);
std::vector<Permutation> bar_f_rotation(int n);

/// The six-element rotation on Sym_5 generated from x = [5 4 2 3 1] by alpha.
CayleyMap bar_f_n_map();
std::vector<Permutation> bar_f_n_rotation();

}  // namespace btcayley
