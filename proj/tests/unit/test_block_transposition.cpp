#include <map>
#include <set>
#include <stdexcept>

#include "btcayley/block_transposition.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace btcayley;

TEST_CASE("s(i,j,k) swaps adjacent blocks") {
  CHECK(make_bt(CutPoints(0, 1, 3, 3)) == Permutation::from_one_line({2, 3, 1}));
  CHECK(make_bt(CutPoints(1, 2, 4, 5)) == Permutation::from_one_line({1, 3, 4, 2, 5}));
  CHECK(to_string(CutPoints(0, 2, 5, 5)) == "s(0,2,5)");
  CHECK_THROWS_AS(CutPoints(1, 1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(CutPoints(0, 2, 5, 4), std::invalid_argument);
}

TEST_CASE("both constructions agree with the string block move") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& c : enumerate_tn(n)) {
      const auto expected = oracle::block_move(c.i(), c.j(), c.k(), n);
      CHECK(oracle::line(make_bt(c)) == expected);
      CHECK(oracle::line(make_bt_piecewise(c)) == expected);
    }
}

TEST_CASE("T_n size, order and distinctness") {
  for (int n = 2; n <= 10; ++n) {
    const auto tn = enumerate_tn(n);
    CHECK(static_cast<long long>(tn.size()) == static_cast<long long>(n) * (n + 1) * (n - 1) / 6);
    CHECK(tn_size(n) == static_cast<long long>(tn.size()));
    CHECK(std::is_sorted(tn.begin(), tn.end()));
    const auto perms = tn_permutations(n);
    CHECK(std::set<Permutation>(perms.begin(), perms.end()).size() == tn.size());
  }
  CHECK(enumerate_tn(4).size() == 10);
}

TEST_CASE("partition class sizes") {
  for (int n = 3; n <= 10; ++n) {
    std::map<PartitionClass, long long> count;
    for (const auto& c : enumerate_tn(n)) ++count[classify(c)];
    const long long m = n - 1;
    CHECK(count[PartitionClass::B] == m);
    CHECK(count[PartitionClass::L] == m * (m - 1) / 2);
    CHECK(count[PartitionClass::F] == m * (m - 1) / 2);
    CHECK(count[PartitionClass::S] == m * (m - 1) * (m - 2) / 6);
  }
}

TEST_CASE("inverse and powers") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& c : enumerate_tn(n)) {
      const auto inv = bt_inverse(c);
      CHECK(oracle::line(make_bt(inv)) == oracle::inverse(oracle::line(make_bt(c))));
    }
  for (int n = 3; n <= 8; ++n)
    for (int i = 0; i < n; ++i)
      for (int k = i + 2; k <= n; ++k) {
        const auto base = oracle::line(make_bt(CutPoints(i, i + 1, k, n)));
        auto power = base;
        for (int e = 1; e <= k - i - 1; ++e) {
          CHECK(oracle::line(make_bt(bt_power(i, k, e, n))) == power);
          power = oracle::compose(power, base);
        }
        CHECK(power == oracle::identity(n));  // order k - i
        CHECK_THROWS_AS(bt_power(i, k, k - i, n), std::invalid_argument);
      }
}

TEST_CASE("recognition is the inverse of make_bt") {
  for (int n = 2; n <= 6; ++n) {
    const auto moves = oracle::all_block_moves(n);
    const std::set<oracle::Line> in_tn(moves.begin(), moves.end());
    for (const auto& p : oracle::all_lines(n)) {
      const auto r = recognize(oracle::perm(p));
      if (p == oracle::identity(n)) {
        CHECK(r.kind == Recognition::Kind::identity);
      } else if (in_tn.contains(p)) {
        REQUIRE(r.kind == Recognition::Kind::block_transposition);
        CHECK(oracle::line(make_bt(*r.cut)) == p);
      } else {
        CHECK(r.kind == Recognition::Kind::none);
        CHECK_FALSE(as_block_transposition(oracle::perm(p)).has_value());
      }
    }
  }
}

TEST_CASE("json form") {
  CHECK(to_json(CutPoints(0, 1, 4, 4)) == R"({"i":0,"j":1,"k":4,"class":"B"})");
  CHECK(to_string(classify(CutPoints(1, 2, 3, 4))) == "S");
}
