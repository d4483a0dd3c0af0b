#include "btcayley/skew_morphism.hpp"

#include <numeric>
#include <string>

namespace btcayley {

FiniteGroup::FiniteGroup(std::size_t size, std::vector<std::uint32_t> table, std::uint32_t identity)
    : size_(size), table_(std::move(table)), identity_(identity) {
  if (size_ == 0 || table_.size() != size_ * size_) throw std::invalid_argument("group table has the wrong shape");
  if (identity_ >= size_) throw std::invalid_argument("identity index out of range");
  for (std::uint32_t a = 0; a < size_; ++a)
    if (multiply(identity_, a) != a || multiply(a, identity_) != a)
      throw std::invalid_argument("identity index is not a two-sided identity");
}

FiniteGroup FiniteGroup::symmetric(int n, int max_degree) {
  if (n > max_degree)
    throw std::invalid_argument("Sym_" + std::to_string(n) + " table exceeds the configured degree limit " +
                                std::to_string(max_degree));
  const auto elements = all_permutations(n);
  const std::size_t size = elements.size();
  std::vector<std::uint32_t> table(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      table[a * size + b] = static_cast<std::uint32_t>(compose(elements[a], elements[b]).rank());
  return FiniteGroup(size, std::move(table), 0);
}

std::optional<SkewMorphismWitness> check_skew(const std::vector<std::uint32_t>& psi, const FiniteGroup& group) {
  const std::size_t size = group.size();
  if (psi.size() != size) throw std::invalid_argument("check_skew: map size differs from group order");
  {
    std::vector<bool> hit(size, false);
    for (auto v : psi) {
      if (v >= size || hit[v]) throw std::invalid_argument("check_skew: map is not a bijection");
      hit[v] = true;
    }
  }
  if (psi[group.identity()] != group.identity()) return std::nullopt;

  // Order of psi: lcm of its cycle lengths.
  long long order = 1;
  {
    std::vector<bool> seen(size, false);
    for (std::size_t start = 0; start < size; ++start) {
      if (seen[start]) continue;
      long long len = 0;
      for (std::size_t x = start; !seen[x]; x = psi[x]) {
        seen[x] = true;
        ++len;
      }
      order = std::lcm(order, len);
      if (order > 4096) throw std::invalid_argument("check_skew: map order exceeds 4096");
    }
  }

  // powers[e][y] = psi^e(y)
  std::vector<std::vector<std::uint32_t>> powers(static_cast<std::size_t>(order));
  powers[0].resize(size);
  std::iota(powers[0].begin(), powers[0].end(), 0u);
  for (std::size_t e = 1; e < powers.size(); ++e) {
    powers[e].resize(size);
    for (std::size_t y = 0; y < size; ++y) powers[e][y] = psi[powers[e - 1][y]];
  }

  SkewMorphismWitness witness;
  witness.psi = psi;
  witness.order = static_cast<int>(order);
  witness.pi_power.assign(size, -1);
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint32_t psi_x = psi[x];
    int found = -1;
    for (std::size_t e = 0; e < powers.size(); ++e) {
      bool ok = true;
      for (std::uint32_t y = 0; y < size && ok; ++y)
        ok = psi[group.multiply(x, y)] == group.multiply(psi_x, powers[e][y]);
      if (!ok) continue;
      if (found >= 0)
        throw AmbiguousPowerFunction("power function not unique at element " + std::to_string(x));
      found = static_cast<int>(e);
    }
    if (found < 0) return std::nullopt;
    witness.pi_power[x] = found;
  }
  return witness;
}

std::vector<std::uint32_t> index_map_over_symmetric(int n,
                                                    const std::function<Permutation(const Permutation&)>& map) {
  const auto elements = all_permutations(n);
  std::vector<std::uint32_t> out(elements.size());
  for (std::size_t a = 0; a < elements.size(); ++a) out[a] = static_cast<std::uint32_t>(map(elements[a]).rank());
  return out;
}

}  // namespace btcayley
