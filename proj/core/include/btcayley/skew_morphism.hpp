#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "btcayley/permutation.hpp"

namespace btcayley {

/// A finite group as a full multiplication table over element indices.
class FiniteGroup {
 public:
  /// table[a * size + b] = index of a*b. Validates shape and identity only.
  FiniteGroup(std::size_t size, std::vector<std::uint32_t> table, std::uint32_t identity);

  /// Sym_n with element index = lexicographic rank. Refuses n > max_degree.
  static FiniteGroup symmetric(int n, int max_degree = 6);

  std::size_t size() const { return size_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return table_[a * size_ + b]; }

 private:
  std::size_t size_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_;
};

/// psi with power function pi_power: psi(xy) = psi(x) psi^{pi_power(x)}(y).
struct SkewMorphismWitness {
  std::vector<std::uint32_t> psi;
  std::vector<int> pi_power;
  int order = 1;  // order of psi as a permutation of G
};

/// Raised when more than one exponent satisfies the skew identity for some x.
class AmbiguousPowerFunction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Returns the witness if psi is a skew-morphism of G, else nullopt.
/// Requires psi to be a bijection of element indices (std::invalid_argument).
std::optional<SkewMorphismWitness> check_skew(const std::vector<std::uint32_t>& psi, const FiniteGroup& group);

/// psi as an index map over Sym_n (rank order) from a permutation-level map.
std::vector<std::uint32_t> index_map_over_symmetric(int n, const std::function<Permutation(const Permutation&)>& map);

}  // namespace btcayley
