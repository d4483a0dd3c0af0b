#include "btcayley/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btcayley {

namespace {

void check_degree(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw std::invalid_argument("permutation degree " + std::to_string(n) + " outside [1, " +
                                std::to_string(max_n) + "]");
}

// values must be a bijection of {base, ..., base + size - 1}
bool is_bijection(std::span<const int> values, int base) {
  std::vector<bool> seen(values.size(), false);
  for (int v : values) {
    const int x = v - base;
    if (x < 0 || x >= static_cast<int>(values.size()) || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n, kMaxPoints);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int t = 0; t < n; ++t) p.image_[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(t);
  return p;
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  check_degree(static_cast<int>(images.size()), kMaxPoints);
  if (!is_bijection(images, 1)) throw std::invalid_argument("one-line form is not a bijection of [n]");
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(images.size());
  for (std::size_t t = 0; t < images.size(); ++t) p.image_[t] = static_cast<std::uint8_t>(images[t] - 1);
  return p;
}

Permutation Permutation::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(n_);
  for (int t = 0; t < n_; ++t) out[static_cast<std::size_t>(t)] = image_[static_cast<std::size_t>(t)] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int t = 0; t < n_; ++t)
    if (image_[static_cast<std::size_t>(t)] != t) return false;
  return true;
}

bool Permutation::is_even() const {
  std::array<bool, kMaxPoints> seen{};
  int transpositions = 0;
  for (int t = 0; t < n_; ++t) {
    if (seen[static_cast<std::size_t>(t)]) continue;
    int len = 0;
    for (int x = t; !seen[static_cast<std::size_t>(x)]; x = image_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::pack() const {
  std::uint64_t key = 0;
  for (int t = 0; t < n_; ++t) key |= static_cast<std::uint64_t>(image_[static_cast<std::size_t>(t)]) << (4 * t);
  return key;
}

Permutation Permutation::unpack(std::uint64_t key, int n) {
  check_degree(n, kMaxPoints);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int t = 0; t < n; ++t) p.image_[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>((key >> (4 * t)) & 0xF);
  return p;
}

std::uint64_t Permutation::rank() const {
  // Lehmer code: digit t counts later entries smaller than entry t.
  std::uint64_t r = 0;
  for (int t = 0; t < n_; ++t) {
    int smaller = 0;
    for (int u = t + 1; u < n_; ++u)
      if (image_[static_cast<std::size_t>(u)] < image_[static_cast<std::size_t>(t)]) ++smaller;
    r = r * static_cast<std::uint64_t>(n_ - t) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

Permutation Permutation::unrank(std::uint64_t rank, int n) {
  check_degree(n, kMaxPoints);
  if (rank >= factorial(n)) throw std::invalid_argument("rank out of range for degree " + std::to_string(n));
  std::array<int, kMaxPoints> digits{};
  for (int t = n - 1; t >= 0; --t) {
    const auto base = static_cast<std::uint64_t>(n - t);
    digits[static_cast<std::size_t>(t)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int t = 0; t < n; ++t) {
    const auto it = pool.begin() + digits[static_cast<std::size_t>(t)];
    p.image_[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(*it);
    pool.erase(it);
  }
  return p;
}

ExtendedPermutation ExtendedPermutation::identity(int n) {
  check_degree(n, kMaxPoints - 1);
  ExtendedPermutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int x = 0; x <= n; ++x) p.image_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
  return p;
}

ExtendedPermutation ExtendedPermutation::from_images(std::span<const int> images) {
  if (images.size() < 2) throw std::invalid_argument("extended permutation needs at least 2 points");
  check_degree(static_cast<int>(images.size()) - 1, kMaxPoints - 1);
  if (!is_bijection(images, 0)) throw std::invalid_argument("images are not a bijection of {0..n}");
  ExtendedPermutation p;
  p.n_ = static_cast<std::uint8_t>(images.size() - 1);
  for (std::size_t x = 0; x < images.size(); ++x) p.image_[x] = static_cast<std::uint8_t>(images[x]);
  return p;
}

ExtendedPermutation ExtendedPermutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

ExtendedPermutation ExtendedPermutation::lift(const Permutation& pi) {
  check_degree(pi.degree(), kMaxPoints - 1);
  ExtendedPermutation p;
  p.n_ = pi.n_;
  for (int t = 1; t <= pi.degree(); ++t) p.image_[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(pi(t));
  return p;
}

Permutation ExtendedPermutation::restrict() const {
  if (!fixes_zero()) throw std::invalid_argument("extended permutation " + to_string(*this) + " moves 0");
  Permutation p;
  p.n_ = n_;
  for (int t = 1; t <= n_; ++t)
    p.image_[static_cast<std::size_t>(t - 1)] = static_cast<std::uint8_t>(image_[static_cast<std::size_t>(t)] - 1);
  return p;
}

std::vector<int> ExtendedPermutation::images() const {
  std::vector<int> out(static_cast<std::size_t>(n_) + 1);
  for (int x = 0; x <= n_; ++x) out[static_cast<std::size_t>(x)] = image_[static_cast<std::size_t>(x)];
  return out;
}

Permutation compose(const Permutation& pi, const Permutation& rho) {
  if (pi.n_ != rho.n_) throw std::invalid_argument("compose: degree mismatch");
  Permutation out;
  out.n_ = pi.n_;
  for (std::size_t t = 0; t < pi.n_; ++t) out.image_[t] = pi.image_[rho.image_[t]];
  return out;
}

ExtendedPermutation compose(const ExtendedPermutation& pi, const ExtendedPermutation& rho) {
  if (pi.n_ != rho.n_) throw std::invalid_argument("compose: degree mismatch");
  ExtendedPermutation out;
  out.n_ = pi.n_;
  for (std::size_t x = 0; x <= pi.n_; ++x) out.image_[x] = pi.image_[rho.image_[x]];
  return out;
}

Permutation inverse(const Permutation& pi) {
  Permutation out;
  out.n_ = pi.n_;
  for (std::size_t t = 0; t < pi.n_; ++t) out.image_[pi.image_[t]] = static_cast<std::uint8_t>(t);
  return out;
}

ExtendedPermutation inverse(const ExtendedPermutation& pi) {
  ExtendedPermutation out;
  out.n_ = pi.n_;
  for (std::size_t x = 0; x <= pi.n_; ++x) out.image_[pi.image_[x]] = static_cast<std::uint8_t>(x);
  return out;
}

ExtendedPermutation alpha_power(int n, long long r) {
  check_degree(n, kMaxPoints - 1);
  const long long m = n + 1;
  const long long shift = ((r % m) + m) % m;
  ExtendedPermutation out;
  out.n_ = static_cast<std::uint8_t>(n);
  for (long long x = 0; x <= n; ++x)
    out.image_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>((x + shift) % m);
  return out;
}

Permutation reverse_permutation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) images[static_cast<std::size_t>(t)] = n - t;
  return Permutation::from_one_line(images);
}

Permutation beta_permutation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) images[static_cast<std::size_t>(t)] = (t + 1) % n + 1;
  return Permutation::from_one_line(images);
}

std::variant<Permutation, ExtendedPermutation> special(int n, Special which) {
  switch (which) {
    case Special::identity: return Permutation::identity(n);
    case Special::reverse: return reverse_permutation(n);
    case Special::alpha: return alpha_power(n, 1);
    case Special::beta: return beta_permutation(n);
  }
  throw std::invalid_argument("unknown special permutation");
}

Permutation parse_permutation(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw std::invalid_argument("permutation literal must look like \"[2 3 1]\": " + std::string(text));
  for (std::size_t p = 0; p < text.size(); ++p) {
    if ((p < open || p > close) && !std::isspace(static_cast<unsigned char>(text[p])))
      throw std::invalid_argument("stray characters around permutation literal: " + std::string(text));
  }
  std::istringstream in(std::string(text.substr(open + 1, close - open - 1)));
  std::vector<int> images;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad entry '" + token + "' in permutation literal");
    images.push_back(value);
  }
  if (images.empty()) throw std::invalid_argument("empty permutation literal");
  return Permutation::from_one_line(images);
}

std::string to_string(const Permutation& pi) {
  std::string out = "[";
  for (int t = 1; t <= pi.degree(); ++t) {
    if (t > 1) out += ' ';
    out += std::to_string(pi(t));
  }
  return out + "]";
}

std::string to_string(const ExtendedPermutation& pi) {
  std::string out = "[";
  for (int x = 0; x <= pi.degree(); ++x) {
    if (x > 0) out += ' ';
    out += std::to_string(pi(x));
  }
  return out + "]";
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n, kMaxPoints);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int t = 2; t <= n; ++t) f *= static_cast<std::uint64_t>(t);
  return f;
}

}  // namespace btcayley
