#include "btcayley/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace btcayley {

namespace {

int reduce(long long r, int n) {
  const long long m = n + 1;
  return static_cast<int>(((r % m) + m) % m);
}

// pi on {0..n} with pi(0) = 0
int extended_value(const Permutation& pi, int t) { return t == 0 ? 0 : pi(t); }

}  // namespace

Permutation toric_f(const Permutation& pi, long long r) {
  const int n = pi.degree();
  const int m = n + 1;
  const int shift = reduce(r, n);
  const int base = extended_value(pi, shift);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t)
    images[static_cast<std::size_t>(t - 1)] = ((extended_value(pi, (shift + t) % m) - base) % m + m) % m;
  return Permutation::from_one_line(images);
}

Permutation toric_f_by_conjugation(const Permutation& pi, long long r) {
  const int n = pi.degree();
  const int shift = reduce(r, n);
  const auto lifted = ExtendedPermutation::lift(pi);
  return compose(compose(alpha_power(n, n + 1 - lifted(shift)), lifted), alpha_power(n, shift)).restrict();
}

Permutation reverse_g(const Permutation& pi) {
  const int n = pi.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) images[static_cast<std::size_t>(t - 1)] = n + 1 - pi(n + 1 - t);
  return Permutation::from_one_line(images);
}

Permutation reverse_g_by_conjugation(const Permutation& pi) {
  const auto w = ExtendedPermutation::lift(reverse_permutation(pi.degree()));
  return compose(compose(w, ExtendedPermutation::lift(pi)), w).restrict();
}

Permutation bar_f(const Permutation& pi, long long r) { return inverse(toric_f(inverse(pi), r)); }

Permutation bar_f_by_conjugation(const Permutation& pi, long long r) {
  const int n = pi.degree();
  const int shift = reduce(r, n);
  const int exponent = extended_value(inverse(pi), shift);
  return compose(compose(alpha_power(n, n + 1 - shift), ExtendedPermutation::lift(pi)), alpha_power(n, exponent))
      .restrict();
}

CutPoints bt_image_closed_form(const CutPoints& c, ImageMap map) {
  const int i = c.i(), j = c.j(), k = c.k(), n = c.n();
  switch (map) {
    case ImageMap::f:
      if (i > 0) return CutPoints(i - 1, j - 1, k - 1, n);
      return CutPoints(k - j - 1, n - j, n, n);
    case ImageMap::bar_f:
      if (i > 0) return CutPoints(i - 1, j - 1, k - 1, n);
      return CutPoints(j - 1, k - 1, n, n);
    case ImageMap::g:
      return CutPoints(n - k, n - j, n - i, n);
  }
  throw std::invalid_argument("unknown image map");
}

CutPoints bar_f_power_closed_form(const CutPoints& c, int e) {
  CutPoints out = c;
  const int steps = reduce(e, c.n());
  for (int s = 0; s < steps; ++s) out = bt_image_closed_form(out, ImageMap::bar_f);
  return out;
}

std::vector<Permutation> toric_class(const Permutation& pi) {
  std::vector<Permutation> out;
  for (int r = 0; r <= pi.degree(); ++r) out.push_back(toric_f(pi, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long singleton_toric_class_count(int n) {
  long long count = 0;
  for (const auto& pi : all_permutations(n)) {
    // f generates the class, so a fixed point of f_1 is a singleton class.
    if (toric_f(pi, 1) == pi) ++count;
  }
  return count;
}

long long euler_phi(long long m) {
  long long result = m;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

DihedralElement DihedralElement::make(long long r, bool refl, int n) {
  if (n < 1) throw std::invalid_argument("dihedral element needs n >= 1");
  return DihedralElement{reduce(r, n), refl, n};
}

DihedralElement dihedral_compose(const DihedralElement& a, const DihedralElement& b) {
  if (a.n != b.n) throw std::invalid_argument("dihedral_compose: degree mismatch");
  // g^e o bar-f^r = bar-f^{(-1)^e r} o g^e
  const long long moved = a.refl ? -static_cast<long long>(b.r) : b.r;
  return DihedralElement::make(a.r + moved, a.refl != b.refl, a.n);
}

DihedralElement dihedral_inverse(const DihedralElement& d) {
  if (d.refl) return d;
  return DihedralElement::make(-static_cast<long long>(d.r), false, d.n);
}

Permutation apply_dihedral(const DihedralElement& d, const Permutation& pi) {
  if (d.n != pi.degree()) throw std::invalid_argument("apply_dihedral: degree mismatch");
  const Permutation reflected = d.refl ? reverse_g(pi) : pi;
  return d.r == 0 ? reflected : bar_f(reflected, d.r);
}

std::vector<DihedralElement> dihedral_group(int n) {
  std::vector<DihedralElement> out;
  for (int refl = 0; refl < 2; ++refl)
    for (int r = 0; r <= n; ++r) out.push_back(DihedralElement::make(r, refl != 0, n));
  return out;
}

std::vector<DihedralElement> dihedral_generators(int n) {
  return {DihedralElement::make(1, false, n), DihedralElement::make(0, true, n)};
}

std::string to_string(const DihedralElement& d) {
  return "t^" + std::to_string(d.r) + (d.refl ? "*g" : "");
}

SkewIdentity skew_identity_bar_f(const Permutation& rho, const Permutation& pi, long long r) {
  if (rho.degree() != pi.degree()) throw std::invalid_argument("skew_identity_bar_f: degree mismatch");
  const int shift = reduce(r, rho.degree());
  const int s = extended_value(inverse(rho), shift);
  return SkewIdentity{bar_f(compose(rho, pi), shift), compose(bar_f(rho, shift), bar_f(pi, s)), s};
}

Permutation apply(const TranslationToric& a, const Permutation& pi) { return compose(a.h, bar_f(pi, a.r)); }

TranslationToric compose(const TranslationToric& a, const TranslationToric& b) {
  const int n = a.h.degree();
  if (b.h.degree() != n) throw std::invalid_argument("compose: degree mismatch");
  const Permutation d = compose(a.h, bar_f(b.h, a.r));
  const int u = reduce(b.r + extended_value(inverse(b.h), a.r), n);
  return TranslationToric{d, u};
}

ExtendedPermutation phi_iso(const Permutation& h, long long r) {
  const int n = h.degree();
  return compose(ExtendedPermutation::lift(h), alpha_power(n, n + 1 - reduce(r, n)));
}

}  // namespace btcayley
