#include <map>
#include <set>

#include "btcayley/toric.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace btcayley;

TEST_CASE("f, bar-f and g match the oracle in both implementations") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : oracle::all_lines(n)) {
      const auto pi = oracle::perm(p);
      CHECK(oracle::line(reverse_g(pi)) == oracle::reverse_g(p));
      CHECK(reverse_g_by_conjugation(pi) == reverse_g(pi));
      for (int r = -1; r <= n + 1; ++r) {
        CHECK(oracle::line(toric_f(pi, r)) == oracle::toric_f(p, r));
        CHECK(toric_f_by_conjugation(pi, r) == toric_f(pi, r));
        CHECK(oracle::line(bar_f(pi, r)) == oracle::bar_f(p, r));
        CHECK(bar_f_by_conjugation(pi, r) == bar_f(pi, r));
      }
    }
}

TEST_CASE("toric maps form a cyclic group and g inverts it") {
  const int n = 5;
  for (const auto& pi : all_permutations(n))
    for (int r = 0; r <= n; ++r) {
      for (int u = 0; u <= n; ++u) CHECK(toric_f(toric_f(pi, u), r) == toric_f(pi, r + u));
      CHECK(reverse_g(toric_f(reverse_g(pi), r)) == toric_f(pi, n + 1 - r));
      CHECK(reverse_g(bar_f(reverse_g(pi), r)) == bar_f(pi, n + 1 - r));
    }
}

TEST_CASE("closed forms on T_n agree with direct application") {
  for (int n = 3; n <= 9; ++n)
    for (const auto& c : enumerate_tn(n)) {
      const auto x = oracle::line(make_bt(c));
      const auto check = [&](ImageMap map, const oracle::Line& expected) {
        const auto image = bt_image_closed_form(c, map);
        CHECK(oracle::line(make_bt(image)) == expected);
      };
      check(ImageMap::f, oracle::toric_f(x, 1));
      check(ImageMap::bar_f, oracle::bar_f(x, 1));
      check(ImageMap::g, oracle::reverse_g(x));
      auto power = x;
      for (int e = 0; e <= n + 1; ++e) {
        CHECK(oracle::line(make_bt(bar_f_power_closed_form(c, e))) == power);
        power = oracle::bar_f(power, 1);
      }
    }
}

TEST_CASE("toric classes and singletons") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::set<oracle::Line>> classes;
    for (const auto& p : oracle::all_lines(n)) {
      std::set<oracle::Line> cls;
      for (int r = 0; r <= n; ++r) cls.insert(oracle::toric_f(p, r));
      classes.insert(cls);
      std::set<oracle::Line> got;
      for (const auto& q : toric_class(oracle::perm(p))) got.insert(oracle::line(q));
      CHECK(got == cls);
    }
    long long singletons = 0;
    for (const auto& cls : classes) singletons += cls.size() == 1;
    CHECK(singleton_toric_class_count(n) == singletons);
  }
  for (int n = 2; n <= 8; ++n) CHECK(singleton_toric_class_count(n) == euler_phi(n + 1));
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(13) == 12);
}

TEST_CASE("dihedral group D_{n+1}") {
  for (int n = 3; n <= 6; ++n) {
    const auto group = dihedral_group(n);
    REQUIRE(group.size() == static_cast<std::size_t>(2 * (n + 1)));
    const auto points = all_permutations(n);
    std::set<std::vector<Permutation>> actions;
    for (const auto& d : group) {
      std::vector<Permutation> images;
      for (const auto& pi : points) images.push_back(apply_dihedral(d, pi));
      actions.insert(images);
    }
    CHECK(actions.size() == group.size());  // faithful
    for (const auto& a : group)
      for (const auto& b : group) {
        const auto ab = dihedral_compose(a, b);
        for (std::size_t s = 0; s < points.size(); s += 7)
          CHECK(apply_dihedral(ab, points[s]) == apply_dihedral(a, apply_dihedral(b, points[s])));
      }
    for (const auto& a : group) CHECK(dihedral_compose(a, dihedral_inverse(a)) == DihedralElement::identity(n));
    // Generated by bar-f and g.
    const auto gens = dihedral_generators(n);
    std::set<DihedralElement> closure{DihedralElement::identity(n)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& x : std::vector<DihedralElement>(closure.begin(), closure.end()))
        for (const auto& s : gens) grew = closure.insert(dihedral_compose(s, x)).second || grew;
    }
    CHECK(closure.size() == group.size());
  }
  CHECK(to_string(DihedralElement::make(2, true, 4)) == "t^2*g");
  CHECK(DihedralElement::make(-1, false, 4).r == 4);
}

TEST_CASE("skew identity for bar-f over Sym_4") {
  const int n = 4;
  const auto points = all_permutations(n);
  for (const auto& rho : points)
    for (const auto& pi : points)
      for (int r = 0; r <= n; ++r) {
        const auto id = skew_identity_bar_f(rho, pi, r);
        CHECK(id.holds());
        CHECK(id.s == (r == 0 ? 0 : inverse(rho)(r)));
        CHECK(id.lhs == bar_f(compose(rho, pi), r));
      }
}

TEST_CASE("product rule and Phi on L(Sym_n) bar-F") {
  for (int n = 3; n <= 4; ++n) {
    const auto points = all_permutations(n);
    std::set<ExtendedPermutation> images;
    for (const auto& h : points)
      for (int r = 0; r <= n; ++r) {
        const TranslationToric a{h, r};
        images.insert(phi_iso(h, r));
        for (const auto& k : points)
          for (int u = 0; u <= n; u += 2) {
            const TranslationToric b{k, u};
            const auto ab = compose(a, b);
            for (const auto& pi : points) CHECK(apply(ab, pi) == apply(a, apply(b, pi)));
            CHECK(phi_iso(ab.h, ab.r) == compose(phi_iso(h, r), phi_iso(k, u)));
          }
      }
    CHECK(images.size() == factorial(n + 1));
  }
}
