// Claims about Cay(Sym_n, T_n), the block transposition graph Gamma and the
// distinguished vertex set V.

#include <map>
#include <set>

#include "btcayley/automorphism.hpp"
#include "btcayley/distance.hpp"
#include "btcayley/gamma.hpp"
#include "btcayley/toric.hpp"
#include "claim_support.hpp"

namespace btcayley::cli::detail {

namespace {

using Edge = std::pair<CutPoints, CutPoints>;

Edge make_edge(const CutPoints& a, const CutPoints& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool bt_edge(const CutPoints& a, const CutPoints& b) {
  return as_block_transposition(compose(inverse(make_bt(a)), make_bt(b))).has_value();
}

ClaimOutcome gamma_regular_claim(int n, const Budget&) {
  const Graph gamma = gamma_graph(n);
  const int expected = n == 4 ? 3 : 2 * (n - 2);
  const auto profile = degree_profile(gamma);
  Json histogram = Json::object();
  for (auto [degree, count] : profile) histogram[std::to_string(degree)] = count;
  Json details{{"vertices", gamma.vertex_count()}, {"expected_degree", expected}, {"degrees", histogram}};
  if (profile.size() != 1 || profile.begin()->first != expected) {
    for (int v = 0; v < gamma.vertex_count(); ++v)
      if (gamma.degree(v) != expected)
        return failure({{"vertex", name(gamma.label(v))}, {"degree", gamma.degree(v)}}, details);
  }
  return success(details);
}

ClaimOutcome bipartite_claim(int n, const Budget&) {
  const Graph gamma = gamma_graph(n);
  const auto tn = enumerate_tn(n);
  const auto b = partition_mask(n, PartitionClass::B), l = partition_mask(n, PartitionClass::L);
  const auto f = partition_mask(n, PartitionClass::F), s = partition_mask(n, PartitionClass::S);
  std::vector<bool> lf(tn.size());
  for (std::size_t v = 0; v < tn.size(); ++v) lf[v] = l[v] || f[v];
  std::size_t matching = 0;
  for (int v = 0; v < gamma.vertex_count(); ++v) {
    const auto at = static_cast<std::size_t>(v);
    const auto cut = tn[at];
    if (lf[at] && neighbors_in(gamma, v, b) != 1)
      return failure({{"vertex", name(cut)}, {"b_neighbours", neighbors_in(gamma, v, b)}});
    if (b[at] && neighbors_in(gamma, v, lf) != n - 2)
      return failure({{"vertex", name(cut)}, {"lf_neighbours", neighbors_in(gamma, v, lf)}});
    if (b[at] && neighbors_in(gamma, v, s) != 0) return failure({{"vertex", name(cut)}, {"reason", "B-S edge"}});
    if (l[at] && neighbors_in(gamma, v, f) != 1)
      return failure({{"vertex", name(cut)}, {"f_neighbours", neighbors_in(gamma, v, f)}});
    if (f[at]) {
      if (neighbors_in(gamma, v, l) != 1)
        return failure({{"vertex", name(cut)}, {"l_neighbours", neighbors_in(gamma, v, l)}});
      // The partner of s(i,j,n) in L is s(0,i,j), with s(i,j,n) = s(0,i,j) s(0,j-i,n).
      const CutPoints partner(0, cut.i(), cut.j(), n);
      const int p = tn_index(tn, partner);
      if (p < 0 || !gamma.adjacent(v, p)) return failure({{"vertex", name(cut)}, {"expected_partner", name(partner)}});
      if (make_bt(cut) != compose(make_bt(partner), make_bt(CutPoints(0, cut.j() - cut.i(), n, n))))
        return failure({{"vertex", name(cut)}, {"reason", "matching identity"}});
      ++matching;
    }
    const PartitionClass image = classify(*as_block_transposition(reverse_g(make_bt(cut))));
    const PartitionClass own = classify(cut);
    const PartitionClass want = own == PartitionClass::L ? PartitionClass::F
                                : own == PartitionClass::F ? PartitionClass::L
                                                           : own;
    if (image != want) return failure({{"vertex", name(cut)}, {"reason", "g does not respect the partition"}});
  }
  return success({{"lf_matching_size", matching}, {"b_lf_degree", n - 2}});
}

ClaimOutcome b_clique_claim(int n, const Budget&) {
  const Graph gamma = gamma_graph(n);
  const auto b = partition_mask(n, PartitionClass::B);
  std::vector<int> members;
  for (int v = 0; v < gamma.vertex_count(); ++v)
    if (b[static_cast<std::size_t>(v)]) members.push_back(v);
  for (int u : members)
    for (int v : members)
      if (u < v && !gamma.adjacent(u, v)) return failure({{"u", name(gamma.label(u))}, {"v", name(gamma.label(v))}});
  // Every common neighbour of an edge of Gamma(B) lies in B, so B is the only
  // maximal clique through that edge, and nothing outside B extends B.
  for (int u : members)
    for (int v : members) {
      if (u >= v) continue;
      for (int x : gamma.neighbors(u))
        if (!b[static_cast<std::size_t>(x)] && gamma.adjacent(x, v))
          return failure({{"edge", {name(gamma.label(u)), name(gamma.label(v))}}, {"outside_neighbour", name(gamma.label(x))}});
    }
  return success({{"clique_size", members.size()}});
}

ClaimOutcome block_identities_claim(int n, const Budget&) {
  const auto tn = enumerate_tn(n);
  std::size_t families = 0;
  for (const auto& a : tn)
    for (const auto& c : tn) {
      if (a == c) continue;
      const int i = a.i(), j = a.j(), k = a.k(), i2 = c.i(), j2 = c.j(), k2 = c.k();
      const int family = (i2 == i && j2 == j)   ? 1
                         : (i2 == j && j2 == k) ? 2
                         : (j2 == j && k2 == k) ? 3
                         : (j2 == i && k2 == j) ? 4
                         : (i2 == i && k2 == k) ? 5
                                                : 0;
      if (family == 0) continue;
      ++families;
      if (!bt_edge(a, c)) return failure({{"family", family}, {"a", name(a)}, {"b", name(c)}});
    }
  std::size_t identities = 0;
  auto s = [n](int i, int j, int k) { return make_bt(CutPoints(i, j, k, n)); };
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (s(i, j, n) != compose(s(0, j, n), s(0, n - j, n - j + i))) return failure({{"identity", 1}, {"i", i}, {"j", j}});
      if (s(i, j, n) != compose(s(0, i, j), s(0, j - i, n))) return failure({{"identity", 2}, {"i", i}, {"j", j}});
      if (s(0, j, n) != compose(s(i, j, n), s(0, i, n - j + i))) return failure({{"identity", 3}, {"i", i}, {"j", j}});
      identities += 3;
    }
  for (int j = 1; j < n; ++j)
    for (int i = 1; i < n - j; ++i) {
      if (s(0, j, n) != compose(s(0, j, j + i), s(i, j + i, n))) return failure({{"identity", 4}, {"i", i}, {"j", j}});
      ++identities;
    }
  return success({{"family_pairs", families}, {"identities", identities}});
}

ClaimOutcome maximal_2_cliques_claim(int n, const Budget&) {
  const Graph gamma = gamma_graph(n);
  auto cliques = maximal_2_cliques(gamma);
  tag_distinguished_edges(cliques, gamma, n);
  const auto targets = distinguished_edges(n);
  std::set<Edge> found, expected;
  for (const auto& e : cliques.edges)
    found.insert(make_edge(*as_block_transposition(gamma.label(e.u)), *as_block_transposition(gamma.label(e.v))));
  for (const auto& [a, b] : targets) expected.insert(make_edge(a, b));
  Json details{{"maximal_2_cliques", found.size()}, {"distinguished_edges", expected.size()}};
  for (const auto& e : expected)
    if (!found.contains(e)) return failure({{"not_maximal", {name(e.first), name(e.second)}}}, details);
  for (const auto& e : found)
    if (!expected.contains(e)) return failure({{"unexpected", {name(e.first), name(e.second)}}}, details);
  if (n >= 5) {
    if (found.size() != static_cast<std::size_t>(n + 1)) return failure({{"count", found.size()}}, details);
    std::set<CutPoints> endpoints;
    for (const auto& e : found) endpoints.insert({e.first, e.second});
    if (endpoints.size() != 2 * found.size()) return failure({{"reason", "edges are not pairwise disjoint"}}, details);
    for (int l = 0; l <= n - 3; ++l)
      if (make_bt(targets[static_cast<std::size_t>(l)][0]) != inverse(make_bt(targets[static_cast<std::size_t>(l)][1])))
        return failure({{"edge", l}, {"reason", "endpoints are not mutually inverse"}}, details);
    // bar-f moves e_m to e_{m-1} (and e_0 to e_n).
    for (int m = 0; m <= n; ++m) {
      const auto& [a, b] = targets[static_cast<std::size_t>(m)];
      const auto image = make_edge(*as_block_transposition(bar_f(make_bt(a), 1)),
                                   *as_block_transposition(bar_f(make_bt(b), 1)));
      const auto& want = targets[static_cast<std::size_t>((m + n) % (n + 1))];
      if (image != make_edge(want[0], want[1])) return failure({{"edge", m}, {"reason", "bar-f cycle"}}, details);
    }
    details["pairwise_disjoint"] = true;
  }
  return success(details);
}

ClaimOutcome vertex_set_claim(int n, const Budget&) {
  const auto v = vertex_set_v(n);
  std::set<Permutation> realized;
  for (const auto& c : v) realized.insert(make_bt(c));
  Json details{{"size", v.size()}, {"expected", 2 * (n + 1)}};
  if (v.size() != static_cast<std::size_t>(2 * (n + 1))) return failure({{"size", v.size()}}, details);

  const Permutation seed = make_bt(CutPoints(0, 2, n, n));
  const auto o = orbit(dihedral_generators(n), seed);
  if (std::set<Permutation>(o.begin(), o.end()) != realized) return failure({{"reason", "V is not the orbit of s(0,2,n)"}}, details);
  for (const auto& x : realized) {
    std::set<Permutation> images;
    for (const auto& d : dihedral_group(n)) images.insert(apply_dihedral(d, x));
    if (images != realized) return failure({{"point", name(x)}, {"reason", "action on V is not regular"}}, details);
  }

  const Graph gv = gamma_subgraph(v);
  const auto profile = degree_profile(gv);
  if (profile.size() != 1 || profile.begin()->first != 3)
    return failure({{"reason", "Gamma(V) is not 3-regular"}, {"degrees", profile.begin()->first}}, details);

  // g exchanges the two bar-f orbits on V: e_m goes to e_{n-3-m} with its
  // endpoint roles swapped, e_{n-1} is reversed in place, and the endpoints
  // of e_{n-2} and e_n are exchanged crosswise.
  const auto targets = distinguished_edges(n);
  const auto g_of = [](const CutPoints& c) { return *as_block_transposition(reverse_g(make_bt(c))); };
  for (int m = 0; m <= n - 3; ++m) {
    const auto& [a, b] = targets[static_cast<std::size_t>(m)];
    const auto& [a2, b2] = targets[static_cast<std::size_t>(n - 3 - m)];
    if (g_of(a) != b2 || g_of(b) != a2) return failure({{"edge", m}, {"reason", "g does not send e_m to e_{n-3-m}"}}, details);
  }
  const auto& [p, q] = targets[static_cast<std::size_t>(n - 1)];
  if (g_of(p) != q) return failure({{"edge", n - 1}, {"reason", "g does not reverse e_{n-1}"}}, details);
  const std::vector<std::array<CutPoints, 2>> crosswise{
      {CutPoints(0, n - 2, n - 1, n), CutPoints(1, 2, n, n)},
      {CutPoints(0, n - 2, n, n), CutPoints(0, 2, n, n)},
  };
  for (const auto& [x, y] : crosswise)
    if (g_of(x) != y || g_of(y) != x) return failure({{"point", name(x)}, {"reason", "g image"}}, details);
  details["regular_action"] = true;
  details["gamma_v_degree"] = 3;
  details["gamma_v_edges"] = gv.edge_count();
  return success(details);
}

ClaimOutcome hamilton_claim(int n, const Budget&) {
  const auto cycle = hamilton_cycle_gamma_v(n);
  const auto v = vertex_set_v(n);
  const Graph gv = gamma_subgraph(v);
  const std::set<CutPoints> visited(cycle.begin(), cycle.end());
  Json path = Json::array();
  for (const auto& c : cycle) path.push_back(name(c));
  Json details{{"length", cycle.size()}, {"cycle", path}};
  if (cycle.size() != v.size() || visited != std::set<CutPoints>(v.begin(), v.end()))
    return failure({{"reason", "cycle does not visit V exactly once"}}, details);
  for (std::size_t a = 0; a < cycle.size(); ++a) {
    const int x = tn_index(v, cycle[a]);
    const int y = tn_index(v, cycle[(a + 1) % cycle.size()]);
    if (!gv.adjacent(x, y)) return failure({{"step", a}, {"from", name(cycle[a])}}, details);
  }
  // The opening run alternates through the Lambda edges from s(0,2,3).
  for (int l = 0; l <= n - 4; ++l)
    if (cycle[static_cast<std::size_t>(2 * l)] != CutPoints(l, l + 2, l + 3, n) ||
        cycle[static_cast<std::size_t>(2 * l + 1)] != CutPoints(l, l + 1, l + 3, n))
      return failure({{"reason", "opening path"}, {"l", l}}, details);
  return success(details);
}

ClaimOutcome bfs_claim(int n, const Budget& budget) {
  const Graph cayley = build_cayley(n, tn_permutations(n));
  // Oracle: plain breadth-first search over the materialized graph.
  std::vector<int> dist(static_cast<std::size_t>(cayley.vertex_count()), -1);
  std::vector<int> queue{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int u : cayley.neighbors(queue[head]))
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(queue[head])] + 1;
        queue.push_back(u);
      }
  const int diameter = *std::max_element(dist.begin(), dist.end());
  constexpr int kExhaustive = 5;
  const auto targets = test_permutations(n, kExhaustive, 200, 0xbf5);
  const Permutation iota = Permutation::identity(n);
  for (const auto& pi : targets) {
    budget.check("bfs-distance");
    const Geodesic geo = bfs_distance(iota, pi, budget);
    const int want = dist[static_cast<std::size_t>(pi.rank())];
    if (geo.distance != want) return failure({{"target", name(pi)}, {"distance", geo.distance}, {"oracle", want}});
    if (geo.path.front() != iota || geo.path.back() != pi || geo.moves.size() != static_cast<std::size_t>(want))
      return failure({{"target", name(pi)}, {"reason", "malformed geodesic"}});
    for (std::size_t s = 0; s < geo.moves.size(); ++s)
      if (compose(geo.path[s], make_bt(geo.moves[s])) != geo.path[s + 1])
        return failure({{"target", name(pi)}, {"step", s}, {"reason", "geodesic step"}});
    if (dist[static_cast<std::size_t>(inverse(pi).rank())] != want)
      return failure({{"target", name(pi)}, {"reason", "d(1,pi) != d(1,pi^-1)"}});
  }
  const auto a = random_permutations(n, 25, 0x1ef7), b = random_permutations(n, 25, 0x1ef8);
  for (std::size_t s = 0; s < a.size(); ++s) {
    const int d = bfs_distance(a[s], b[s], budget).distance;
    if (d != dist[static_cast<std::size_t>(compose(inverse(a[s]), b[s]).rank())])
      return failure({{"source", name(a[s])}, {"target", name(b[s])}, {"reason", "left invariance"}});
  }
  return success({{"coverage", coverage(n, kExhaustive)}, {"checked", targets.size()}, {"diameter", diameter}});
}

}  // namespace

void register_graph_claims(std::vector<ClaimSpec>& out) {
  out.push_back({"gamma-regular", {"prop5.8"}, "Gamma is 2(n-2)-regular for n >= 5", 5, 10, gamma_regular_claim});
  out.push_back({"gamma-regular-n4", {}, "Gamma is 3-regular for n = 4", 4, 4, gamma_regular_claim});
  out.push_back({"bipartite-structure", {},
                 "degrees between B, L, F, S: L u F to B is 1 and n-2, L to F is a perfect matching, no B-S edges", 5,
                 10, bipartite_claim});
  out.push_back({"b-clique", {}, "B is the unique maximal clique through each edge of Gamma(B)", 5, 10, b_clique_claim});
  out.push_back({"block-identities", {}, "edge families and composition identities among block transpositions", 4, 9,
                 block_identities_claim});
  out.push_back({"maximal-2-cliques", {}, "the maximal 2-cliques of Gamma are exactly e_0..e_n", 4, 10,
                 maximal_2_cliques_claim});
  out.push_back({"vertex-set-v", {}, "|V| = 2(n+1), V is a regular D_{n+1}-orbit and Gamma(V) is 3-regular", 5, 10,
                 vertex_set_claim});
  out.push_back({"hamilton-cycle", {}, "the constructed cycle is a Hamilton cycle of Gamma(V)", 5, 10, hamilton_claim});
  out.push_back({"bfs-distance", {}, "bidirectional BFS distance matches a full BFS oracle", 2, 7, bfs_claim});
}

}  // namespace btcayley::cli::detail
