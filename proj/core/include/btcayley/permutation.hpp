#pragma once

// Permutations of [n] = {1,...,n} in one-line notation, and permutations of
// the extended point set {0,...,n}.
//
// Storage is 0-based; every public accessor uses the conventional indexing
// of the point set: 1-based for Permutation, 0-based for ExtendedPermutation.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace btcayley {

/// Largest number of points either permutation type can act on.
inline constexpr int kMaxPoints = 16;

/// A bijection of [n], pi(t) = pi_t.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  /// Builds from the one-line images [pi_1 ... pi_n]; throws
  /// std::invalid_argument unless they form a bijection of [n].
  static Permutation from_one_line(std::span<const int> images);
  static Permutation from_one_line(std::initializer_list<int> images);

  int degree() const { return n_; }

  /// pi(t) for 1 <= t <= n.
  int operator()(int t) const { return image_[static_cast<std::size_t>(t - 1)] + 1; }

  std::vector<int> one_line() const;
  bool is_identity() const;
  bool is_even() const;

  /// 4 bits per position; unique among permutations of the same degree.
  std::uint64_t pack() const;
  static Permutation unpack(std::uint64_t key, int n);

  /// Lexicographic rank of the one-line form among all n! permutations.
  std::uint64_t rank() const;
  static Permutation unrank(std::uint64_t rank, int n);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend class ExtendedPermutation;
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxPoints> image_{};
};

/// A bijection of {0,...,n}. The lift [0 pi] of a Permutation fixes 0.
class ExtendedPermutation {
 public:
  ExtendedPermutation() = default;

  static ExtendedPermutation identity(int n);

  /// Images for x = 0..n; throws std::invalid_argument unless bijective.
  static ExtendedPermutation from_images(std::span<const int> images);
  static ExtendedPermutation from_images(std::initializer_list<int> images);

  /// [0 pi].
  static ExtendedPermutation lift(const Permutation& pi);

  /// Inverse of lift; throws std::invalid_argument if 0 is moved.
  Permutation restrict() const;

  int degree() const { return n_; }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  bool fixes_zero() const { return image_[0] == 0; }
  std::vector<int> images() const;

  friend bool operator==(const ExtendedPermutation&, const ExtendedPermutation&) = default;
  friend auto operator<=>(const ExtendedPermutation&, const ExtendedPermutation&) = default;

 private:
  friend ExtendedPermutation compose(const ExtendedPermutation&, const ExtendedPermutation&);
  friend ExtendedPermutation inverse(const ExtendedPermutation&);
  friend ExtendedPermutation alpha_power(int n, long long r);

  std::uint8_t n_ = 0;  // acts on n_ + 1 points
  std::array<std::uint8_t, kMaxPoints> image_{};
};

/// (pi o rho)(t) = pi(rho(t)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& pi, const Permutation& rho);
ExtendedPermutation compose(const ExtendedPermutation& pi, const ExtendedPermutation& rho);

Permutation inverse(const Permutation& pi);
ExtendedPermutation inverse(const ExtendedPermutation& pi);

/// alpha^r with alpha^r(x) = x + r mod n+1. Any integer r is reduced mod n+1.
ExtendedPermutation alpha_power(int n, long long r);

/// w = [n n-1 ... 1].
Permutation reverse_permutation(int n);

/// beta = s(0,1,n) = [2 3 ... n 1].
Permutation beta_permutation(int n);

enum class Special { identity, reverse, alpha, beta };

std::variant<Permutation, ExtendedPermutation> special(int n, Special which);

/// Parses "[2 3 1]". Throws std::invalid_argument on malformed input or a
/// non-bijection.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& pi);
std::string to_string(const ExtendedPermutation& pi);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

std::uint64_t factorial(int n);

}  // namespace btcayley

template <>
struct std::hash<btcayley::Permutation> {
  std::size_t operator()(const btcayley::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.pack() * 31 + static_cast<std::uint64_t>(p.degree()));
  }
};
