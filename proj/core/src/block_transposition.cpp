#include "btcayley/block_transposition.hpp"

#include <stdexcept>

namespace btcayley {

CutPoints::CutPoints(int i, int j, int k, int n) : i_(i), j_(j), k_(k), n_(n) {
  if (!(0 <= i && i < j && j < k && k <= n))
    throw std::invalid_argument("cut points (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ") invalid for n=" + std::to_string(n));
}

Permutation make_bt(const CutPoints& c) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(c.n()));
  for (int t = 1; t <= c.i(); ++t) images.push_back(t);
  for (int t = c.j() + 1; t <= c.k(); ++t) images.push_back(t);
  for (int t = c.i() + 1; t <= c.j(); ++t) images.push_back(t);
  for (int t = c.k() + 1; t <= c.n(); ++t) images.push_back(t);
  return Permutation::from_one_line(images);
}

Permutation make_bt_piecewise(const CutPoints& c) {
  const int i = c.i(), j = c.j(), k = c.k();
  std::vector<int> images(static_cast<std::size_t>(c.n()));
  for (int t = 1; t <= c.n(); ++t) {
    int v = t;
    if (i + 1 <= t && t <= k - j + i)
      v = t + j - i;
    else if (k - j + i + 1 <= t && t <= k)
      v = t + j - k;
    images[static_cast<std::size_t>(t - 1)] = v;
  }
  return Permutation::from_one_line(images);
}

CutPoints bt_inverse(const CutPoints& c) { return CutPoints(c.i(), c.k() - c.j() + c.i(), c.k(), c.n()); }

CutPoints bt_power(int i, int k, int e, int n) {
  if (e < 1 || e > k - i - 1)
    throw std::invalid_argument("exponent " + std::to_string(e) + " leaves T_n for s(" + std::to_string(i) + "," +
                                std::to_string(i + 1) + "," + std::to_string(k) + ")");
  return CutPoints(i, i + e, k, n);
}

std::vector<CutPoints> enumerate_tn(int n) {
  if (n < 2) throw std::invalid_argument("T_n needs n >= 2");
  std::vector<CutPoints> out;
  out.reserve(static_cast<std::size_t>(tn_size(n)));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.emplace_back(i, j, k, n);
  return out;
}

std::vector<Permutation> tn_permutations(int n) {
  std::vector<Permutation> out;
  for (const auto& c : enumerate_tn(n)) out.push_back(make_bt(c));
  return out;
}

PartitionClass classify(const CutPoints& c) {
  const bool head = c.i() == 0;
  const bool tail = c.k() == c.n();
  if (head && tail) return PartitionClass::B;
  if (head) return PartitionClass::L;
  if (tail) return PartitionClass::F;
  return PartitionClass::S;
}

Recognition recognize(const Permutation& pi) {
  const int n = pi.degree();
  int i = 0;
  while (i < n && pi(i + 1) == i + 1) ++i;
  if (i == n) return {Recognition::Kind::identity, std::nullopt};
  int k = n;
  while (k > 0 && pi(k) == k) --k;
  // The block starting at position i+1 has value j+1.
  const int j = pi(i + 1) - 1;
  if (!(i < j && j < k)) return {};
  const CutPoints cut(i, j, k, n);
  int t = i + 1;
  for (int v = j + 1; v <= k; ++v, ++t)
    if (pi(t) != v) return {};
  for (int v = i + 1; v <= j; ++v, ++t)
    if (pi(t) != v) return {};
  return {Recognition::Kind::block_transposition, cut};
}

std::optional<CutPoints> as_block_transposition(const Permutation& pi) { return recognize(pi).cut; }

std::string to_string(const CutPoints& c) {
  return "s(" + std::to_string(c.i()) + "," + std::to_string(c.j()) + "," + std::to_string(c.k()) + ")";
}

std::string to_string(PartitionClass cls) {
  switch (cls) {
    case PartitionClass::B: return "B";
    case PartitionClass::L: return "L";
    case PartitionClass::F: return "F";
    case PartitionClass::S: return "S";
  }
  return "?";
}

std::string to_json(const CutPoints& c) {
  return "{\"i\":" + std::to_string(c.i()) + ",\"j\":" + std::to_string(c.j()) + ",\"k\":" + std::to_string(c.k()) +
         ",\"class\":\"" + to_string(classify(c)) + "\"}";
}

long long tn_size(int n) { return static_cast<long long>(n) * (n + 1) * (n - 1) / 6; }

}  // namespace btcayley
