// Claims about automorphism groups.

#include <set>

#include "btcayley/automorphism.hpp"
#include "btcayley/gamma.hpp"
#include "btcayley/toric.hpp"
#include "claim_support.hpp"

namespace btcayley::cli::detail {

namespace {

ClaimOutcome gamma_automorphisms_claim(int n, const Budget& budget) {
  const Graph gamma = gamma_graph(n);
  SearchOptions options;
  options.budget = budget;
  const auto aut = aut_group(gamma, options);
  const auto dihedral = dihedral_vertex_maps(gamma, n);
  const std::size_t expected = 2 * static_cast<std::size_t>(n + 1);
  Json details{{"expected_order", expected}, {"computed_order", aut.size()}};
  details["match"] = aut.size() == expected;
  if (aut.size() != expected) return failure({{"computed_order", aut.size()}}, details);
  const std::set<VertexMap> found(aut.begin(), aut.end());
  for (std::size_t d = 0; d < dihedral.size(); ++d)
    if (!found.contains(dihedral[d]))
      return failure({{"dihedral_element", to_string(dihedral_group(n)[d])}, {"reason", "not found by the search"}},
                     details);
  if (std::set<VertexMap>(dihedral.begin(), dihedral.end()).size() != expected)
    return failure({{"reason", "dihedral maps are not distinct"}}, details);
  if (n >= 5) {
    // Only the identity fixes a vertex of V.
    const auto v = vertex_set_v(n);
    const auto tn = enumerate_tn(n);
    for (const auto& m : aut) {
      if (m.is_identity()) continue;
      for (const auto& c : v) {
        const int x = tn_index(tn, c);
        if (m(x) == x) return failure({{"fixed_vertex", name(c)}, {"reason", "non-identity automorphism fixes V point"}}, details);
      }
    }
    details["v_stabilizer_trivial"] = true;
  }
  return success(details);
}

// Restriction of each vertex map of Cay(Sym_n, T_n) to the ranks of T_n.
std::set<std::vector<std::uint64_t>> restrictions(const std::vector<VertexMap>& maps, const std::vector<Permutation>& tn) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& m : maps) {
    std::vector<std::uint64_t> row;
    for (const auto& s : tn) row.push_back(static_cast<std::uint64_t>(m(static_cast<int>(s.rank()))));
    out.insert(std::move(row));
  }
  return out;
}

ClaimOutcome stabilizer_claim(int n, const Budget& budget) {
  const auto stabilizer = stabilizer_of_identity(n, budget);
  const std::size_t expected = 2 * static_cast<std::size_t>(n + 1);
  const std::uint64_t aut_order = factorial(n) * stabilizer.size();
  Json details{{"expected_order", expected}, {"computed_order", stabilizer.size()},
               {"aut_order", aut_order}, {"expected_aut_order", 2 * factorial(n + 1)}};
  details["match"] = stabilizer.size() == expected;
  if (stabilizer.size() != expected) return failure({{"computed_order", stabilizer.size()}}, details);

  const auto tn = tn_permutations(n);
  std::set<std::vector<std::uint64_t>> dihedral;
  for (const auto& d : dihedral_group(n)) {
    std::vector<std::uint64_t> row;
    for (const auto& s : tn) row.push_back(apply_dihedral(d, s).rank());
    dihedral.insert(std::move(row));
  }
  if (restrictions(stabilizer, tn) != dihedral)
    return failure({{"reason", "stabilizer does not act on T_n as D_{n+1}"}}, details);
  return success(details);
}

ClaimOutcome kernel_claim(int n, const Budget& budget) {
  // An automorphism fixing the identity and a point of V fixes the whole
  // component of the identity in Cay(Sym_n, V), and only the identity fixes
  // every block transposition.
  const auto stabilizer = stabilizer_of_identity(n, budget);
  std::vector<Permutation> u;
  for (const auto& c : vertex_set_v(n)) u.push_back(make_bt(c));
  for (const auto& x : u)
    if (std::find(u.begin(), u.end(), inverse(x)) == u.end()) return failure({{"reason", "V is not inverse-closed"}});
  const Graph cay_u = build_cayley(n, u);
  const auto component = component_of(cay_u, 0);
  const auto tn = tn_permutations(n);
  std::size_t pairs = 0;
  for (const auto& m : stabilizer) {
    for (const auto& x : u) {
      const int v = static_cast<int>(x.rank());
      if (m(v) != v) continue;
      ++pairs;
      for (int p : component)
        if (m(p) != p)
          return failure({{"fixed_point", name(x)}, {"moved", name(Permutation::unrank(static_cast<std::uint64_t>(p), n))}});
    }
    bool fixes_tn = true;
    for (const auto& s : tn) fixes_tn = fixes_tn && m(static_cast<int>(s.rank())) == static_cast<int>(s.rank());
    if (fixes_tn && !m.is_identity()) return failure({{"reason", "non-trivial automorphism fixes all of T_n"}});
  }
  return success({{"component_size", component.size()}, {"fixing_pairs", pairs}, {"kernel_trivial", true}});
}

ClaimOutcome translation_t_claim(int n, const Budget& budget) {
  const auto points = all_permutations(n);
  const Permutation w = reverse_permutation(n);
  for (const auto& pi : points) {
    if (compose(w, reverse_g(pi)) != translation_t(pi)) return failure({{"pi", name(pi)}, {"reason", "L_w g != t"}});
    if (translation_t(translation_t(pi)) != pi) return failure({{"pi", name(pi)}, {"reason", "t is not an involution"}});
  }
  const Graph cayley = build_cayley(n, tn_permutations(n));
  if (!is_automorphism(cayley, vertex_map_from(cayley, translation_t))) return failure({{"reason", "t is not an automorphism"}});

  std::size_t elements = 0;
  for (const auto& h : points)
    for (int r = 0; r <= n; ++r) {
      budget.check("translation-t");
      const TranslationToric a{h, r};
      bool equal_to_t = true;
      for (const auto& pi : points) {
        const Permutation image = apply(a, pi);
        if (translation_t(image) != apply(a, translation_t(pi)))
          return failure({{"h", name(h)}, {"r", r}, {"pi", name(pi)}, {"reason", "t does not commute"}});
        equal_to_t = equal_to_t && image == translation_t(pi);
      }
      if (equal_to_t) return failure({{"h", name(h)}, {"r", r}, {"reason", "t lies in L(Sym_n) bar-F"}});
      ++elements;
    }
  return success({{"centralized_elements", elements}, {"t_outside_product", true}});
}

ClaimOutcome generated_v_claim(int n, const Budget& budget) {
  std::vector<Permutation> u;
  for (const auto& c : vertex_set_v(n)) u.push_back(make_bt(c));
  const GeneratedSubgroup h(n, u, budget);
  const std::uint64_t expected = n % 2 == 1 ? factorial(n) : factorial(n) / 2;
  Json details{{"size", h.size()}, {"expected", expected}, {"group", n % 2 == 1 ? "Sym" : "Alt"}};
  if (h.size() != expected) return failure({{"size", h.size()}}, details);
  if (n % 2 == 0)
    for (const auto& x : u)
      if (!x.is_even()) return failure({{"odd_generator", name(x)}}, details);
  return success(details);
}

}  // namespace

void register_automorphism_claims(std::vector<ClaimSpec>& out) {
  out.push_back({"gamma-automorphisms", {"thm1"}, "Aut(Gamma) is the dihedral group induced by bar-f and g", 4, 7,
                 gamma_automorphisms_claim});
  out.push_back({"identity-stabilizer", {"thm2"},
                 "the stabilizer of the identity in Aut(Cay(Sym_n, T_n)) is D_{n+1}", 4, 6, stabilizer_claim});
  out.push_back({"stabilizer-kernel", {},
                 "automorphisms fixing the identity and a point of V fix its component; the kernel on T_n is trivial",
                 5, 6, kernel_claim});
  out.push_back({"translation-t", {}, "t = L_w g centralizes L(Sym_n) bar-F without belonging to it", 3, 5,
                 translation_t_claim});
  out.push_back({"v-generated-subgroup", {}, "V generates Sym_n for odd n and Alt_n for even n", 4, 8,
                 generated_v_claim});
}

}  // namespace btcayley::cli::detail
