// Claims about the Cayley maps on Sym_n.

#include "btcayley/cayley_map.hpp"
#include "btcayley/graph.hpp"
#include "btcayley/isomorphism.hpp"
#include "btcayley/toric.hpp"
#include "claim_support.hpp"

namespace btcayley::cli::detail {

namespace {

Json histogram_json(const std::map<std::size_t, std::size_t>& histogram) {
  Json out = Json::object();
  for (const auto& [size, count] : histogram) out[std::to_string(size)] = count;
  return out;
}

Json map_summary(const CayleyMap& m, const std::vector<Face>& fs, const RegularityResult& reg) {
  Json out{{"valency", m.valency()},
           {"dart_count", m.dart_count()},
           {"face_count", fs.size()},
           {"face_sizes", histogram_json(face_size_histogram(fs))},
           {"euler_characteristic", euler_characteristic(m, fs)},
           {"regularity", to_string(reg.status)},
           {"aut_order", reg.aut_order}};
  if (reg.bar_f_exponent) out["bar_f_exponent"] = *reg.bar_f_exponent;
  return out;
}

bool same_generator_set(std::vector<Permutation> a, std::vector<Permutation> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

ClaimOutcome octahedron_claim(int, const Budget& budget) {
  const CayleyMap m = octahedron_map();
  const auto fs = faces(m);
  const RegularityResult reg = is_regular(m, budget);
  Json details = map_summary(m, fs, reg);
  const auto histogram = face_size_histogram(fs);
  if (m.dart_count() != 24) return failure({{"dart_count", m.dart_count()}}, details);
  if (fs.size() != 8 || histogram.size() != 1 || !histogram.contains(3))
    return failure({{"reason", "expected 8 triangular faces"}}, details);
  if (euler_characteristic(m, fs) != 2) return failure({{"reason", "not spherical"}}, details);
  if (reg.status != RegularityResult::Status::regular || reg.aut_order != 24)
    return failure({{"reason", "expected a regular map with 24 automorphisms"}}, details);
  // The rotation R, one step from the first generator.
  if (rotation_R(m, Dart{0, 0}).gen != m.index_of(make_bt(CutPoints(0, 2, 3, 3))))
    return failure({{"reason", "rotation does not advance s(0,1,3) to s(0,2,3)"}}, details);
  const auto bar_f_x = bar_f_rotation(3);
  details["same_as_bar_f_map"] = bar_f_x == m.generators();
  if (bar_f_x != m.generators()) return failure({{"reason", "differs from the n = 3 member of the bar-f family"}}, details);
  return success(details);
}

ClaimOutcome bar_f_map_claim(int n, const Budget& budget) {
  const CayleyMap m = bar_f_map(n);
  const auto fs = faces(m);
  const RegularityResult reg = is_regular(m, budget);
  Json details = map_summary(m, fs, reg);
  if (m.valency() != n + 1) return failure({{"valency", m.valency()}}, details);
  const auto histogram = face_size_histogram(fs);
  if (histogram.size() != 1 || !histogram.contains(static_cast<std::size_t>(n)))
    return failure({{"reason", "face sizes are not all n"}}, details);
  if (euler_characteristic(m, fs) % 2 != 0) return failure({{"reason", "odd Euler characteristic"}}, details);
  if (reg.status != RegularityResult::Status::regular || !reg.witness)
    return failure({{"reason", "not regular"}, {"detail", reg.detail}}, details);
  if (reg.bar_f_exponent != 1) return failure({{"reason", "witness is not bar-f"}}, details);
  if (reg.witness->order != n + 1) return failure({{"witness_order", reg.witness->order}}, details);
  if (reg.aut_order != factorial(n + 1)) return failure({{"aut_order", reg.aut_order}}, details);

  const Permutation sigma = make_bt(CutPoints(0, 1, n, n));
  const Permutation small = make_bt(CutPoints(1, 2, 3, n));
  const int at_sigma = power_at(*reg.witness, sigma);
  const int at_small = power_at(*reg.witness, small);
  details["power_at_s(0,1,n)"] = at_sigma;
  details["power_at_s(1,2,3)"] = at_small;
  if (at_sigma != n || at_small != 1) return failure({{"reason", "unexpected power function values"}}, details);
  const auto t = t_balance(*reg.witness, m);
  details["t_balanced"] = t.has_value();
  if (t) return failure({{"t", *t}}, details);

  // The face through (identity, s(0,1,n)) walks iota, sigma, then right
  // multiplies by s(n-2,n-1,n), ..., s(1,2,3).
  std::vector<std::uint64_t> expected{Permutation::identity(n).rank(), sigma.rank()};
  Permutation walk = sigma;
  for (int i = n - 2; i >= 1; --i) {
    walk = compose(walk, make_bt(CutPoints(i, i + 1, i + 2, n)));
    expected.push_back(walk.rank());
  }
  const Face face = face_through(m, Dart{Permutation::identity(n).rank(), m.index_of(sigma)});
  if (face.vertex_walk() != expected) {
    Json got = Json::array();
    for (auto r : face.vertex_walk()) got.push_back(name(Permutation::unrank(r, n)));
    return failure({{"face_walk", got}}, details);
  }
  details["face_walk_length"] = expected.size();
  return success(details);
}

// psi(rho) = alpha o [0 rho] o alpha^s with s chosen so that 0 is fixed.
Permutation derived_skew(const Permutation& rho) {
  const int n = rho.degree();
  const int s = inverse(rho)(n);
  const auto lifted = compose(alpha_power(n, 1), compose(ExtendedPermutation::lift(rho), alpha_power(n, s)));
  return lifted.restrict();
}

ClaimOutcome bar_f_n_map_claim(int n, const Budget& budget) {
  const CayleyMap m = bar_f_n_map();
  const auto& x = m.generators();
  // The rotation is the orbit of its first element under psi.
  for (std::size_t s = 0; s < x.size(); ++s) {
    const Permutation next = derived_skew(x[s]);
    if (next != x[(s + 1) % x.size()])
      return failure({{"x", name(x[s])}, {"psi(x)", name(next)}, {"expected", name(x[(s + 1) % x.size()])}});
    if (next != bar_f(x[s], n)) return failure({{"x", name(x[s])}, {"reason", "psi differs from bar-f_n"}});
  }
  const auto fs = faces(m);
  const RegularityResult reg = is_regular(m, budget);
  Json details = map_summary(m, fs, reg);
  if (reg.status != RegularityResult::Status::regular) return failure({{"reason", "not regular"}}, details);
  if (reg.bar_f_exponent != n) return failure({{"reason", "witness is not bar-f_n"}}, details);
  if (reg.aut_order != factorial(n + 1)) return failure({{"aut_order", reg.aut_order}}, details);
  if (face_size_histogram(fs).size() != 1) return failure({{"reason", "face sizes are not uniform"}}, details);
  if (same_generator_set(x, bar_f_rotation(n))) return failure({{"reason", "X' coincides with X"}}, details);
  return success(details);
}

ClaimOutcome non_isomorphism_claim(int n, const Budget& budget) {
  const Graph a = build_cayley(n, bar_f_rotation(n));
  const Graph b = build_cayley(n, bar_f_n_rotation());
  const auto da = degree_profile(a);
  const auto db = degree_profile(b);
  Json details{{"vertices", a.vertex_count()}, {"edges_a", a.edge_count()}, {"edges_b", b.edge_count()}};
  if (da.size() != 1 || !da.contains(n + 1) || db.size() != 1 || !db.contains(n + 1))
    return failure({{"reason", "graphs are not both (n+1)-regular"}}, details);
  SearchOptions options;
  options.budget = budget;
  const auto iso = graphs_isomorphic(a, b, options);
  details["isomorphic"] = iso.has_value();
  if (iso) return failure({{"reason", "an isomorphism exists"}}, details);
  return success(details);
}

}  // namespace

void register_map_claims(std::vector<ClaimSpec>& out) {
  out.push_back({"octahedron-map", {}, "the octahedron is a regular Cayley map on Sym_3", 3, 3, octahedron_claim});
  out.push_back({"bar-f-map", {},
                 "the map with rotation (s(0,1,n), s(0,n-1,n), s(n-2,n-1,n), ..., s(0,1,2)) is regular via bar-f",
                 3, 6, bar_f_map_claim});
  out.push_back({"bar-f-n-map", {}, "the Sym_5 map X' generated from [5 4 2 3 1] is regular via bar-f_5", 5, 5,
                 bar_f_n_map_claim});
  out.push_back({"map-graph-non-isomorphism", {},
                 "the underlying graphs of the two regular maps on Sym_5 are not isomorphic", 5, 5,
                 non_isomorphism_claim});
}

}  // namespace btcayley::cli::detail
