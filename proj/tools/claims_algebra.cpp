// Claims about permutations, block transpositions and the toric maps.

#include <map>
#include <set>

#include "btcayley/automorphism.hpp"
#include "btcayley/toric.hpp"
#include "claim_support.hpp"

namespace btcayley::cli::detail {

namespace {

ClaimOutcome tn_size_claim(int n, const Budget&) {
  const auto tn = enumerate_tn(n);
  const auto perms = tn_permutations(n);
  const long long expected = static_cast<long long>(n) * (n + 1) * (n - 1) / 6;
  Json details{{"size", tn.size()}, {"expected", expected}};
  if (static_cast<long long>(tn.size()) != expected) return failure({{"size", tn.size()}}, details);
  const std::set<Permutation> distinct(perms.begin(), perms.end());
  if (distinct.size() != perms.size()) return failure({{"reason", "two cut-point triples give one permutation"}}, details);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    if (perms[a].is_identity()) return failure({{"identity", name(tn[a])}}, details);
    if (!distinct.contains(inverse(perms[a]))) return failure({{"inverse_missing", name(tn[a])}}, details);
  }
  return success(details);
}

ClaimOutcome partition_claim(int n, const Budget&) {
  std::map<PartitionClass, long long> counts;
  for (const auto& c : enumerate_tn(n)) {
    const PartitionClass cls = classify(c);
    const bool b = c.i() == 0 && c.k() == n, l = c.i() == 0 && c.k() < n;
    const bool f = c.i() > 0 && c.k() == n;
    const PartitionClass direct = b ? PartitionClass::B : l ? PartitionClass::L : f ? PartitionClass::F : PartitionClass::S;
    if (cls != direct) return failure({{"cut", name(c)}, {"class", to_string(cls)}});
    ++counts[cls];
  }
  const long long m = n - 1;
  const std::map<PartitionClass, long long> expected{{PartitionClass::B, m},
                                                      {PartitionClass::L, m * (m - 1) / 2},
                                                      {PartitionClass::F, m * (m - 1) / 2},
                                                      {PartitionClass::S, m * (m - 1) * (m - 2) / 6}};
  Json details = Json::object();
  for (auto cls : {PartitionClass::B, PartitionClass::L, PartitionClass::F, PartitionClass::S})
    details[to_string(cls)] = counts[cls];
  for (auto [cls, size] : expected)
    if (counts[cls] != size)
      return failure({{"class", to_string(cls)}, {"count", counts[cls]}, {"expected", size}}, details);
  return success(details);
}

ClaimOutcome bt_identities_claim(int n, const Budget&) {
  const auto tn = enumerate_tn(n);
  for (const auto& c : tn) {
    const Permutation s = make_bt(c);
    if (s != make_bt_piecewise(c)) return failure({{"cut", name(c)}, {"reason", "concatenation and piecewise forms differ"}});
    const auto back = as_block_transposition(s);
    if (!back || *back != c) return failure({{"cut", name(c)}, {"reason", "recognition round trip"}});
    if (make_bt(bt_inverse(c)) != inverse(s)) return failure({{"cut", name(c)}, {"reason", "inverse formula"}});
    if (s(c.i() + 1) != c.j() + 1 || s(c.k() - c.j() + c.i()) != c.k() || s(c.k()) != c.j())
      return failure({{"cut", name(c)}, {"reason", "anchor values"}});
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 2; k <= n; ++k) {
      const Permutation step = make_bt(CutPoints(i, i + 1, k, n));
      Permutation power = step;
      for (int e = 1; e <= k - i - 1; ++e) {
        if (power != make_bt(bt_power(i, k, e, n)))
          return failure({{"i", i}, {"k", k}, {"e", e}, {"reason", "power formula"}});
        power = compose(power, step);
      }
    }
  // B together with the identity is the cyclic group generated by beta.
  std::set<Permutation> cyclic{Permutation::identity(n)};
  for (const auto& c : tn)
    if (classify(c) == PartitionClass::B) cyclic.insert(make_bt(c));
  for (const auto& a : cyclic)
    for (const auto& b : cyclic)
      if (!cyclic.contains(compose(a, b))) return failure({{"a", name(a)}, {"b", name(b)}, {"reason", "B not closed"}});
  if (cyclic.size() != static_cast<std::size_t>(n)) return failure({{"cyclic_order", cyclic.size()}});
  return success({{"cut_points_checked", tn.size()}, {"beta_order", cyclic.size()}});
}

constexpr int kExhaustiveSym = 5;
constexpr std::size_t kSamples = 300;

ClaimOutcome toric_identities_claim(int n, const Budget& budget) {
  const auto perms = test_permutations(n, kExhaustiveSym, kSamples, 0x70c1);
  const ExtendedPermutation w0 = ExtendedPermutation::lift(reverse_permutation(n));
  for (int r = 0; r <= n; ++r)
    if (compose(compose(w0, alpha_power(n, r)), w0) != alpha_power(n, n + 1 - r))
      return failure({{"r", r}, {"reason", "[0 w] alpha^r [0 w] != alpha^(n+1-r)"}});
  for (const auto& pi : perms) {
    budget.check("toric-identities");
    const Permutation g = reverse_g(pi);
    if (g != reverse_g_by_conjugation(pi)) return failure({{"pi", name(pi)}, {"reason", "g pointwise vs conjugation"}});
    if (reverse_g(g) != pi) return failure({{"pi", name(pi)}, {"reason", "g not an involution"}});
    for (int r = 0; r <= n; ++r) {
      const Permutation f = toric_f(pi, r);
      auto bad = [&](const char* why) { return failure({{"pi", name(pi)}, {"r", r}, {"reason", why}}); };
      if (f != toric_f_by_conjugation(pi, r)) return bad("f_r pointwise vs conjugation");
      const int pi_r = r == 0 ? 0 : pi(r);
      if (inverse(f) != toric_f(inverse(pi), pi_r)) return bad("(f_r(pi))^-1 != f_{pi_r}(pi^-1)");
      if (reverse_g(toric_f(g, r)) != toric_f(pi, n + 1 - r)) return bad("g f_r g != f_{n+1-r}");
      const Permutation bf = bar_f(pi, r);
      if (bf != bar_f_by_conjugation(pi, r)) return bad("bar-f_r defining forms differ");
      Permutation iterated = pi;
      for (int e = 0; e < r; ++e) iterated = bar_f(iterated, 1);
      if (bf != iterated) return bad("bar-f_r != bar-f^r");
      for (int s = 0; s <= n; ++s)
        if (toric_f(f, s) != toric_f(pi, r + s)) return bad("f_s f_r != f_{r+s}");
    }
  }
  return success({{"coverage", coverage(n, kExhaustiveSym)}, {"permutations", perms.size()}});
}

ClaimOutcome skew_identity_claim(int n, const Budget& budget) {
  constexpr int kExhaustive = 4;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  if (n <= kExhaustive) {
    const auto all = all_permutations(n);
    for (const auto& rho : all)
      for (const auto& pi : all) pairs.emplace_back(rho, pi);
  } else {
    const auto a = random_permutations(n, 1000, 0x5ce1);
    const auto b = random_permutations(n, 1000, 0x5ce2);
    for (std::size_t s = 0; s < a.size(); ++s) pairs.emplace_back(a[s], b[s]);
    // The block transposition pairs are always checked in full.
    const auto tn = tn_permutations(n);
    for (const auto& rho : tn)
      for (const auto& pi : tn) pairs.emplace_back(rho, pi);
  }
  for (const auto& [rho, pi] : pairs) {
    budget.check("skew-identity");
    for (int r = 0; r <= n; ++r) {
      const SkewIdentity id = skew_identity_bar_f(rho, pi, r);
      if (!id.holds())
        return failure({{"rho", name(rho)}, {"pi", name(pi)}, {"r", r}, {"lhs", name(id.lhs)}, {"rhs", name(id.rhs)}});
    }
  }
  return success({{"coverage", coverage(n, kExhaustive)}, {"pairs", pairs.size()}});
}

ClaimOutcome phi_claim(int n, const Budget& budget) {
  std::vector<TranslationToric> elements;
  for (const auto& h : all_permutations(n))
    for (int r = 0; r <= n; ++r) elements.push_back({h, r});
  const auto points = all_permutations(n);

  // Phi is injective with (n+1)! images, hence onto Sym of {0..n}.
  std::set<ExtendedPermutation> images;
  for (const auto& a : elements) images.insert(phi_iso(a.h, a.r));
  const std::uint64_t expected = factorial(n + 1);
  Json details{{"group_order", elements.size()}, {"image_size", images.size()}, {"expected", expected}};
  if (images.size() != elements.size() || images.size() != expected)
    return failure({{"reason", "Phi is not a bijection"}}, details);

  // The vertex maps L_h bar-f_r are pairwise distinct as well.
  std::set<std::vector<Permutation>> as_maps;
  for (const auto& a : elements) {
    std::vector<Permutation> table;
    for (const auto& pi : points) table.push_back(apply(a, pi));
    as_maps.insert(std::move(table));
  }
  if (as_maps.size() != elements.size()) return failure({{"reason", "two products L_h bar-f_r coincide"}}, details);

  constexpr int kExhaustiveProducts = 4;
  const auto probes = n <= kExhaustiveProducts ? points : random_permutations(n, 8, 0x9f1);
  for (const auto& a : elements)
    for (const auto& b : elements) {
      budget.check("phi-isomorphism");
      const TranslationToric ab = compose(a, b);
      if (phi_iso(ab.h, ab.r) != compose(phi_iso(a.h, a.r), phi_iso(b.h, b.r)))
        return failure({{"a", {name(a.h), a.r}}, {"b", {name(b.h), b.r}}, {"reason", "Phi not multiplicative"}},
                       details);
      for (const auto& pi : probes)
        if (apply(ab, pi) != apply(a, apply(b, pi)))
          return failure({{"a", {name(a.h), a.r}}, {"b", {name(b.h), b.r}}, {"pi", name(pi)},
                          {"reason", "product rule disagrees with composition"}},
                         details);
    }
  details["product_check"] = coverage(n, kExhaustiveProducts);
  return success(details);
}

ClaimOutcome tn_invariance_claim(int n, const Budget&) {
  const auto tn = enumerate_tn(n);
  for (const auto& c : tn) {
    const Permutation s = make_bt(c);
    const std::pair<ImageMap, Permutation> images[] = {
        {ImageMap::f, toric_f(s, 1)}, {ImageMap::bar_f, bar_f(s, 1)}, {ImageMap::g, reverse_g(s)}};
    for (const auto& [map, image] : images) {
      const auto cut = as_block_transposition(image);
      const char* which = map == ImageMap::f ? "f" : map == ImageMap::bar_f ? "bar-f" : "g";
      if (!cut) return failure({{"cut", name(c)}, {"map", which}, {"image", name(image)}, {"reason", "left T_n"}});
      if (*cut != bt_image_closed_form(c, map))
        return failure({{"cut", name(c)}, {"map", which}, {"image", name(*cut)}, {"reason", "closed form disagrees"}});
    }
    for (int e = 0; e <= n; ++e)
      if (make_bt(bar_f_power_closed_form(c, e)) != bar_f(s, e))
        return failure({{"cut", name(c)}, {"e", e}, {"reason", "iterated closed form"}});
  }

  // Powers of bar-f carrying prefix moves into interior moves.
  struct Table {
    int e, i, j, k, ti, tj, tk;
  };
  std::vector<Table> rows;
  for (int j = 3; j < n; ++j)
    for (int k = j + 1; k <= n; ++k) rows.push_back({2, 0, j, k, j - 2, k - 2, n - 1});
  for (int k = 4; k <= n; ++k) rows.push_back({3, 0, 1, k, k - 3, n - 2, n - 1});
  rows.push_back({4, 0, 1, 2, n - 3, n - 2, n - 1});
  rows.push_back({5, 0, 1, 3, n - 4, n - 3, n - 1});
  for (int k = 5; k <= n; ++k) rows.push_back({4, 0, 2, k, k - 4, n - 3, n - 1});
  rows.push_back({5, 0, 2, 3, n - 4, n - 2, n - 1});
  rows.push_back({6, 0, 2, 4, n - 5, n - 3, n - 1});
  std::size_t checked = 0;
  for (const auto& t : rows) {
    if (!(0 <= t.ti && t.ti < t.tj && t.tj < t.tk && t.tk <= n) || t.k > n) continue;
    const CutPoints from(t.i, t.j, t.k, n), to(t.ti, t.tj, t.tk, n);
    if (bar_f(make_bt(from), t.e) != make_bt(to))
      return failure({{"from", name(from)}, {"e", t.e}, {"expected", name(to)}});
    ++checked;
  }
  return success({{"cut_points", tn.size()}, {"prefix_power_rows", checked}});
}

ClaimOutcome toric_singletons_claim(int n, const Budget& budget) {
  std::map<std::size_t, std::size_t> sizes;
  std::set<Permutation> seen;
  std::size_t singletons = 0;
  for (const auto& pi : all_permutations(n)) {
    if (seen.contains(pi)) continue;
    budget.check("toric-singletons");
    const auto cls = toric_class(pi);
    if ((n + 1) % cls.size() != 0) return failure({{"pi", name(pi)}, {"class_size", cls.size()}});
    seen.insert(cls.begin(), cls.end());
    ++sizes[cls.size()];
    if (cls.size() == 1) ++singletons;
  }
  const long long phi = euler_phi(n + 1);
  Json histogram = Json::object();
  for (auto [size, count] : sizes) histogram[std::to_string(size)] = count;
  Json details{{"singletons", singletons}, {"phi", phi}, {"library_count", singleton_toric_class_count(n)},
               {"class_size_histogram", histogram}};
  if (static_cast<long long>(singletons) != phi || singleton_toric_class_count(n) != phi)
    return failure({{"singletons", singletons}}, details);
  return success(details);
}

ClaimOutcome dihedral_claim(int n, const Budget&) {
  const auto group = dihedral_group(n);
  const auto tn = tn_permutations(n);
  const Permutation iota = Permutation::identity(n);
  std::set<std::vector<Permutation>> actions;
  for (const auto& d : group) {
    if (apply_dihedral(d, iota) != iota) return failure({{"element", to_string(d)}, {"reason", "moves the identity"}});
    std::vector<Permutation> table;
    for (const auto& s : tn) table.push_back(apply_dihedral(d, s));
    actions.insert(std::move(table));
  }
  if (actions.size() != group.size() || group.size() != static_cast<std::size_t>(2 * (n + 1)))
    return failure({{"distinct_actions", actions.size()}, {"group_order", group.size()}});
  for (const auto& a : group)
    for (const auto& b : group)
      for (const auto& s : tn)
        if (apply_dihedral(dihedral_compose(a, b), s) != apply_dihedral(a, apply_dihedral(b, s)))
          return failure({{"a", to_string(a)}, {"b", to_string(b)}, {"s", name(s)}, {"reason", "action"}});
  const DihedralElement g = DihedralElement::make(0, true, n);
  for (int r = 0; r <= n; ++r)
    if (dihedral_compose(dihedral_compose(g, DihedralElement::make(r, false, n)), g) !=
        DihedralElement::make(n + 1 - r, false, n))
      return failure({{"r", r}, {"reason", "g bar-f_r g != bar-f_{n+1-r}"}});
  for (const auto& s : tn) {
    const auto o = orbit(dihedral_generators(n), s);
    if ((2 * (n + 1)) % static_cast<int>(o.size()) != 0) return failure({{"seed", name(s)}, {"orbit", o.size()}});
  }
  return success({{"group_order", group.size()}, {"faithful_on_tn", true}});
}

}  // namespace

void register_algebra_claims(std::vector<ClaimSpec>& out) {
  out.push_back({"tn-size", {}, "T_n has n(n+1)(n-1)/6 distinct non-identity elements and is inverse-closed", 2, 10,
                 tn_size_claim});
  out.push_back({"partition", {}, "B, L, F, S partition T_n with sizes n-1, C(n-1,2), C(n-1,2), C(n-1,3)", 2, 10,
                 partition_claim});
  out.push_back({"bt-identities", {}, "block transposition forms, inverse, powers and anchor values", 2, 10,
                 bt_identities_claim});
  out.push_back({"toric-identities", {}, "toric and reverse map identities on Sym_n", 2, 8, toric_identities_claim});
  out.push_back({"skew-identity", {}, "bar-f_r(rho pi) = bar-f_r(rho) bar-f_s(pi) with s = (rho^-1)_r", 2, 8,
                 skew_identity_claim});
  out.push_back({"phi-isomorphism", {}, "L(Sym_n) bar-F is isomorphic to Sym_{n+1} via Phi", 3, 5, phi_claim});
  out.push_back({"tn-invariance", {}, "f, bar-f and g preserve T_n and agree with their closed forms", 3, 10,
                 tn_invariance_claim});
  out.push_back({"toric-singletons", {}, "exactly phi(n+1) toric classes are singletons", 2, 8, toric_singletons_claim});
  out.push_back({"dihedral-group", {}, "bar-f and g generate a dihedral group of order 2(n+1) acting faithfully on T_n",
                 4, 10, dihedral_claim});
}

}  // namespace btcayley::cli::detail
