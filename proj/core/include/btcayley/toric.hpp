#pragma once

// Toric maps f_r, their inverse-transported variants bar-f_r, the reverse map
// g, and the toric-reverse dihedral group D_{n+1} = <bar-f, g> acting on Sym_n.
//
// Rotation exponents are read modulo n+1 everywhere.

#include <string>
#include <vector>

#include "btcayley/block_transposition.hpp"
#include "btcayley/permutation.hpp"

namespace btcayley {

/// (f_r(pi))_t = pi_{r+t} - pi_r, indices and values mod n+1, pi_0 = 0.
Permutation toric_f(const Permutation& pi, long long r);

/// Same map through the lift: [0 rho] = alpha^{n+1-pi_r} o [0 pi] o alpha^r.
Permutation toric_f_by_conjugation(const Permutation& pi, long long r);

/// (g(pi))_t = n+1 - pi_{n+1-t}.
Permutation reverse_g(const Permutation& pi);

/// [0 rho] = [0 w] o [0 pi] o [0 w].
Permutation reverse_g_by_conjugation(const Permutation& pi);

/// bar-f_r(pi) = (f_r(pi^-1))^-1.
Permutation bar_f(const Permutation& pi, long long r);

/// [0 rho] = alpha^{n+1-r} o [0 pi] o alpha^{(pi^-1)_r}.
Permutation bar_f_by_conjugation(const Permutation& pi, long long r);

enum class ImageMap { f, bar_f, g };

/// Cut points of the image of s(i,j,k) under f, bar-f or g, by closed form.
CutPoints bt_image_closed_form(const CutPoints& c, ImageMap map);

/// bar-f^e applied to cut points by iterating the closed form.
CutPoints bar_f_power_closed_form(const CutPoints& c, int e);

/// The toric class {f_r(pi) : 0 <= r <= n}, sorted and deduplicated.
std::vector<Permutation> toric_class(const Permutation& pi);

/// Number of toric classes of Sym_n with a single element.
long long singleton_toric_class_count(int n);

/// Euler's totient.
long long euler_phi(long long m);

/// Element bar-f^r o g^refl of D_{n+1}.
struct DihedralElement {
  int r = 0;
  bool refl = false;
  int n = 0;

  static DihedralElement make(long long r, bool refl, int n);
  static DihedralElement identity(int n) { return make(0, false, n); }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

/// a o b (b acts first), using g o bar-f_r o g = bar-f_{n+1-r}.
DihedralElement dihedral_compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement dihedral_inverse(const DihedralElement& d);

/// Applies g (when refl) and then bar-f_r.
Permutation apply_dihedral(const DihedralElement& d, const Permutation& pi);

/// All 2(n+1) elements: rotations first, then reflections, by increasing r.
std::vector<DihedralElement> dihedral_group(int n);

/// {bar-f, g}.
std::vector<DihedralElement> dihedral_generators(int n);

std::string to_string(const DihedralElement& d);  // "t^r" or "t^r*g"

/// Both sides of bar-f_r(rho o pi) = bar-f_r(rho) o bar-f_s(pi), s = (rho^-1)_r.
struct SkewIdentity {
  Permutation lhs;
  Permutation rhs;
  int s = 0;
  bool holds() const { return lhs == rhs; }
};

SkewIdentity skew_identity_bar_f(const Permutation& rho, const Permutation& pi, long long r);

/// The vertex map L_h o bar-f_r of Cay(Sym_n, T_n).
struct TranslationToric {
  Permutation h;
  int r = 0;

  friend bool operator==(const TranslationToric&, const TranslationToric&) = default;
};

/// pi -> h o bar-f_r(pi).
Permutation apply(const TranslationToric& a, const Permutation& pi);

/// Product rule L_h bar-f_r L_k bar-f_u = L_d bar-f_{u + (k^-1)_r}, d = h o bar-f_r(k).
TranslationToric compose(const TranslationToric& a, const TranslationToric& b);

/// Phi(L_h o bar-f_r) = [0 h] o alpha^{n+1-r}.
ExtendedPermutation phi_iso(const Permutation& h, long long r);

}  // namespace btcayley
