// Acceptance run: one PASS/FAIL line per criterion, each under a fixed
// wall-clock limit. A criterion passes only if its checks hold and it
// finishes within its limit.
//
// Exit status is zero when every criterion passes except those listed in
// kKnownFailures, which are still evaluated and still printed as FAIL. A
// listed criterion that starts passing makes the run fail so the list stays
// accurate. With --strict any FAIL is fatal.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "btcayley/automorphism.hpp"
#include "btcayley/block_transposition.hpp"
#include "btcayley/cayley_map.hpp"
#include "btcayley/gamma.hpp"
#include "btcayley/graph.hpp"
#include "btcayley/isomorphism.hpp"
#include "btcayley/toric.hpp"
#include "oracles.hpp"

using namespace btcayley;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  // Returns an empty string on success, otherwise the first violated check.
  std::function<std::string()> run;
};

// Gamma at n = 4 is 4-regular, not 3-regular; see the README.
const std::set<int> kKnownFailures{2};

#define EXPECT(cond, what)          \
  do {                              \
    if (!(cond)) return std::string(what); \
  } while (0)

std::string at(int n, const std::string& what) { return "n=" + std::to_string(n) + ": " + what; }

std::string criterion_tn_sizes() {
  for (int n = 3; n <= 8; ++n) {
    const auto tn = enumerate_tn(n);
    EXPECT(static_cast<long long>(tn.size()) == static_cast<long long>(n) * (n + 1) * (n - 1) / 6, at(n, "|T_n|"));
    EXPECT(tn.size() == oracle::all_block_moves(n).size(), at(n, "|T_n| vs string block moves"));
    std::map<PartitionClass, long long> count;
    for (const auto& c : tn) ++count[classify(c)];
    const long long m = n - 1;
    EXPECT(count[PartitionClass::B] == m, at(n, "|B|"));
    EXPECT(count[PartitionClass::L] == m * (m - 1) / 2, at(n, "|L|"));
    EXPECT(count[PartitionClass::F] == m * (m - 1) / 2, at(n, "|F|"));
    EXPECT(count[PartitionClass::S] == m * (m - 1) * (m - 2) / 6, at(n, "|S|"));
  }
  return {};
}

std::string criterion_gamma_regular() {
  for (int n = 5; n <= 7; ++n) {
    const Graph gamma = gamma_graph(n);
    EXPECT(oracle::adjacency(gamma) == oracle::gamma(n), at(n, "Gamma differs from oracle"));
    EXPECT(degree_profile(gamma) == (std::map<int, int>{{2 * (n - 2), gamma.vertex_count()}}), at(n, "not 2(n-2)-regular"));
  }
  const Graph gamma4 = gamma_graph(4);
  EXPECT(oracle::adjacency(gamma4) == oracle::gamma(4), at(4, "Gamma differs from oracle"));
  const auto profile = degree_profile(gamma4);
  if (profile != std::map<int, int>{{3, gamma4.vertex_count()}}) {
    std::string got;
    for (auto [d, c] : profile) got += std::to_string(c) + " vertices of degree " + std::to_string(d);
    return at(4, "expected 3-regular, found " + got);
  }
  return {};
}

std::string criterion_two_cliques() {
  for (int n = 5; n <= 7; ++n) {
    const Graph gamma = gamma_graph(n);
    const auto cliques = maximal_2_cliques(gamma);
    std::set<std::pair<int, int>> got;
    for (const auto& e : cliques.edges) got.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    EXPECT(got == oracle::triangle_free_edges(oracle::adjacency(gamma)), at(n, "2-cliques differ from oracle"));
    EXPECT(got.size() == static_cast<std::size_t>(n + 1), at(n, "count != n+1"));
    std::set<std::pair<int, int>> expected;
    const auto tn = enumerate_tn(n);
    std::set<int> endpoints;
    for (const auto& [a, b] : distinguished_edges(n)) {
      const int u = static_cast<int>(std::lower_bound(tn.begin(), tn.end(), a) - tn.begin());
      const int v = static_cast<int>(std::lower_bound(tn.begin(), tn.end(), b) - tn.begin());
      expected.emplace(std::min(u, v), std::max(u, v));
      endpoints.insert(u);
      endpoints.insert(v);
    }
    EXPECT(got == expected, at(n, "2-cliques are not e_0..e_n"));
    EXPECT(endpoints.size() == 2 * got.size(), at(n, "e_m not pairwise disjoint"));
  }
  return {};
}

std::string criterion_gamma_v() {
  for (int n = 5; n <= 8; ++n) {
    const auto v = vertex_set_v(n);
    EXPECT(v.size() == static_cast<std::size_t>(2 * (n + 1)), at(n, "|V|"));
    const Graph gv = gamma_subgraph(v);
    EXPECT(degree_profile(gv) == (std::map<int, int>{{3, gv.vertex_count()}}), at(n, "Gamma(V) not 3-regular"));
    std::set<Permutation> points;
    for (const auto& c : v) points.insert(make_bt(c));
    const auto group = dihedral_group(n);
    std::set<Permutation> images;
    for (const auto& d : group) images.insert(apply_dihedral(d, *points.begin()));
    EXPECT(images == points, at(n, "D_{n+1} not transitive on V"));
    EXPECT(group.size() == points.size(), at(n, "D_{n+1} not regular on V"));
    const auto cycle = hamilton_cycle_gamma_v(n);
    EXPECT(std::set<CutPoints>(cycle.begin(), cycle.end()) == std::set<CutPoints>(v.begin(), v.end()) &&
               cycle.size() == v.size(),
           at(n, "cycle does not visit V once"));
    const auto moves = oracle::all_block_moves(n);
    const std::set<oracle::Line> t(moves.begin(), moves.end());
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      const auto x = oracle::line(make_bt(cycle[a]));
      const auto y = oracle::line(make_bt(cycle[(a + 1) % cycle.size()]));
      EXPECT(t.contains(oracle::compose(oracle::inverse(x), y)), at(n, "cycle step not an edge"));
    }
  }
  return {};
}

std::string criterion_aut_gamma() {
  for (int n = 4; n <= 6; ++n) {
    const Graph gamma = gamma_graph(n);
    const auto aut = aut_group(gamma);
    EXPECT(aut.size() == static_cast<std::size_t>(2 * (n + 1)), at(n, "order " + std::to_string(aut.size())));
    const auto d = dihedral_vertex_maps(gamma, n);
    EXPECT(std::set<VertexMap>(aut.begin(), aut.end()) == std::set<VertexMap>(d.begin(), d.end()),
           at(n, "not the induced D_{n+1}"));
    if (n <= 5) EXPECT(oracle::count_automorphisms(oracle::adjacency(gamma)) == aut.size(), at(n, "oracle count"));
  }
  return {};
}

std::string criterion_stabilizer() {
  for (int n = 4; n <= 5; ++n) {
    const auto stabilizer = stabilizer_of_identity(n);
    EXPECT(stabilizer.size() == static_cast<std::size_t>(2 * (n + 1)), at(n, "stabilizer order"));
    const std::uint64_t aut = factorial(n) * stabilizer.size();
    EXPECT(aut == (n == 4 ? 240u : 1440u), at(n, "|Aut| " + std::to_string(aut)));
    EXPECT(aut == 2 * factorial(n + 1), at(n, "|Aut| != 2(n+1)!"));
  }
  return {};
}

std::string criterion_identities() {
  const int n = 4;
  const auto points = all_permutations(n);
  for (const auto& pi : points) {
    const auto line = oracle::line(pi);
    for (int r = 0; r <= n; ++r) {
      const auto f = toric_f_by_conjugation(pi, r);
      EXPECT(oracle::line(f) == oracle::toric_f(line, r), "f_r by conjugation vs pointwise formula");
      EXPECT(toric_f(pi, r) == f, "f_r forms differ");
      const int pi_r = r == 0 ? 0 : pi(r);
      EXPECT(inverse(f) == toric_f_by_conjugation(inverse(pi), pi_r), "(f_r(pi))^-1 != f_{pi_r}(pi^-1)");
      EXPECT(reverse_g_by_conjugation(toric_f(reverse_g_by_conjugation(pi), r)) == toric_f(pi, n + 1 - r),
             "g f_r g != f_{n+1-r}");
      EXPECT(oracle::line(reverse_g_by_conjugation(pi)) == oracle::reverse_g(line), "g by conjugation vs pointwise formula");
      EXPECT(reverse_g(pi) == reverse_g_by_conjugation(pi), "g forms differ");
    }
  }
  for (const auto& rho : points)
    for (const auto& pi : points)
      for (int r = 0; r <= n; ++r) {
        const int s = r == 0 ? 0 : inverse(rho)(r);
        EXPECT(bar_f(compose(rho, pi), r) == compose(bar_f(rho, r), bar_f(pi, s)), "skew identity");
      }
  for (int m = 3; m <= 4; ++m) {
    const auto sym = all_permutations(m);
    std::set<ExtendedPermutation> images;
    for (const auto& h : sym)
      for (int r = 0; r <= m; ++r) {
        images.insert(phi_iso(h, r));
        for (const auto& k : sym)
          for (int u = 0; u <= m; ++u) {
            const auto ab = compose(TranslationToric{h, r}, TranslationToric{k, u});
            EXPECT(phi_iso(ab.h, ab.r) == compose(phi_iso(h, r), phi_iso(k, u)), at(m, "Phi not a homomorphism"));
          }
      }
    EXPECT(images.size() == factorial(m + 1), at(m, "Phi not a bijection"));
  }
  return {};
}

std::string criterion_invariance() {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& c : enumerate_tn(n)) {
      const auto x = make_bt(c);
      const std::pair<ImageMap, Permutation> images[] = {
          {ImageMap::f, toric_f(x, 1)}, {ImageMap::bar_f, bar_f(x, 1)}, {ImageMap::g, reverse_g(x)}};
      for (const auto& [map, image] : images) {
        const auto cut = as_block_transposition(image);
        EXPECT(cut.has_value(), at(n, to_string(c) + " leaves T_n"));
        EXPECT(*cut == bt_image_closed_form(c, map), at(n, to_string(c) + " closed form"));
      }
      Permutation power = x;
      for (int e = 1; e <= n; ++e) {
        power = bar_f(power, 1);
        EXPECT(make_bt(bar_f_power_closed_form(c, e)) == power, at(n, to_string(c) + " bar-f power"));
      }
    }
  }
  return {};
}

std::string criterion_octahedron() {
  const CayleyMap m = octahedron_map();
  const auto fs = faces(m);
  EXPECT(m.dart_count() == 24, "dart count");
  EXPECT(fs.size() == 8, "face count");
  EXPECT(face_size_histogram(fs) == (std::map<std::size_t, std::size_t>{{3, 8}}), "faces not triangles");
  EXPECT(euler_characteristic(m, fs) == 2, "Euler characteristic");
  const auto reg = is_regular(m);
  EXPECT(reg.status == RegularityResult::Status::regular, "not regular");
  EXPECT(reg.aut_order == 24, "|Aut| != 24");
  std::vector<oracle::Line> x;
  for (const auto& g : m.generators()) x.push_back(oracle::line(g));
  EXPECT(oracle::map_automorphism_count(3, x) == 24, "oracle |Aut|");
  return {};
}

std::string criterion_bar_f_map() {
  for (int n = 3; n <= 6; ++n) {
    const CayleyMap m = bar_f_map(n);
    EXPECT(m.valency() == n + 1, at(n, "valency"));
    const auto reg = is_regular(m);
    EXPECT(reg.status == RegularityResult::Status::regular && reg.witness, at(n, "not regular"));
    EXPECT(reg.bar_f_exponent == 1, at(n, "witness is not bar-f"));
    const auto fs = faces(m);
    const auto histogram = face_size_histogram(fs);
    EXPECT(histogram.size() == 1 && histogram.begin()->first == static_cast<std::size_t>(n), at(n, "face size"));
    EXPECT(power_at(*reg.witness, make_bt(CutPoints(0, 1, n, n))) == n, at(n, "pi_power(s(0,1,n))"));
    EXPECT(power_at(*reg.witness, make_bt(CutPoints(1, 2, 3, n))) == 1, at(n, "pi_power(s(1,2,3))"));
    EXPECT(!t_balance(*reg.witness, m), at(n, "t-balanced"));
    EXPECT(reg.aut_order == factorial(n + 1), at(n, "|Aut| != (n+1)!"));
  }
  return {};
}

std::string criterion_bar_f_n_map() {
  const int n = 5;
  const CayleyMap m = bar_f_n_map();
  const auto reg = is_regular(m);
  EXPECT(reg.status == RegularityResult::Status::regular, "X' map not regular");
  EXPECT(reg.bar_f_exponent == n, "witness is not bar-f_n");
  const auto& x = m.generators();
  for (std::size_t s = 0; s < x.size(); ++s) EXPECT(bar_f(x[s], n) == x[(s + 1) % x.size()], "bar-f_n(x) != p'(x)");
  const Graph a = build_cayley(n, bar_f_rotation(n));
  const Graph b = build_cayley(n, x);
  EXPECT(a.vertex_count() == 120 && b.vertex_count() == 120, "vertex count");
  EXPECT(degree_profile(a) == (std::map<int, int>{{6, 120}}) && degree_profile(b) == (std::map<int, int>{{6, 120}}),
         "not 6-regular");
  EXPECT(!graphs_isomorphic(a, b).has_value(), "Cay(Sym_5, X) and Cay(Sym_5, X') are isomorphic");
  return {};
}

std::string criterion_generated_v() {
  for (int n = 4; n <= 7; ++n) {
    std::vector<Permutation> v;
    for (const auto& c : vertex_set_v(n)) v.push_back(make_bt(c));
    const GeneratedSubgroup h(n, v);
    const std::uint64_t expected = n % 2 ? factorial(n) : factorial(n) / 2;
    EXPECT(h.size() == expected, at(n, "|<V>| = " + std::to_string(h.size())));
    if (n % 2 == 0)
      for (const auto& p : v) EXPECT(p.is_even(), at(n, "odd element in V"));
  }
  return {};
}

std::string criterion_singletons() {
  for (int n = 3; n <= 7; ++n) {
    long long singletons = 0;
    for (const auto& pi : all_permutations(n))
      if (toric_class(pi).size() == 1) ++singletons;
    EXPECT(singletons == euler_phi(n + 1), at(n, "singletons " + std::to_string(singletons)));
    EXPECT(singleton_toric_class_count(n) == singletons, at(n, "counting routine"));
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria{
      {1, "T_n size and partition sizes, n = 3..8", 1, criterion_tn_sizes},
      {2, "Gamma is 2(n-2)-regular for n = 5..7 and 3-regular at n = 4", 1, criterion_gamma_regular},
      {3, "n+1 disjoint maximal 2-cliques equal to e_0..e_n, n = 5..7", 5, criterion_two_cliques},
      {4, "Gamma(V): |V| = 2(n+1), 3-regular, regular D_{n+1}, Hamilton cycle, n = 5..8", 5, criterion_gamma_v},
      {5, "Aut(Gamma) = induced D_{n+1}, n = 4..6", 60, criterion_aut_gamma},
      {6, "identity stabilizer has 2(n+1) elements, |Aut| = 240, 1440", 120, criterion_stabilizer},
      {7, "toric, reverse, skew and Phi identities, exhaustive at n = 4", 10, criterion_identities},
      {8, "T_n invariance and closed forms under f, bar-f, g, n = 4..8", 5, criterion_invariance},
      {9, "octahedron map on Sym_3", 1, criterion_octahedron},
      {10, "bar-f map for n = 3..6", 60, criterion_bar_f_map},
      {11, "bar-f_5 map on Sym_5 and non-isomorphic underlying graphs", 300, criterion_bar_f_n_map},
      {12, "V generates Sym_n (n = 5, 7) and Alt_n (n = 4, 6)", 30, criterion_generated_v},
      {13, "singleton toric classes number phi(n+1), n = 3..7", 10, criterion_singletons},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.limit_seconds) problem = "over the time limit";
    const bool pass = problem.empty();
    const bool known = kKnownFailures.contains(c.id);
    std::printf("%s %2d  %s  [%.3f s / %.0f s]%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, pass ? "" : "  ", problem.c_str());
    if (pass == known || (strict && !pass)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
