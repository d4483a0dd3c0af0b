#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "claims.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace btcayley::cli;
using nlohmann::json;

namespace {

template <class Options>
std::string run(int (*command)(const Options&, std::ostream&), const Options& options, int expected_code = exit_ok) {
  std::ostringstream out;
  const int code = command(options, out);
  CHECK(code == expected_code);
  return out.str();
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(BTCAYLEY_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("enumerate") {
  const auto tn = json::parse(run(cmd_enumerate, EnumerateOptions{4, "tn", false}));
  CHECK(tn["count"] == 10);
  CHECK(tn["rows"].size() == 10);
  CHECK(tn["rows"][0]["permutation"] == "[2 1 3 4]");

  const auto partition = json::parse(run(cmd_enumerate, EnumerateOptions{5, "partition", false}));
  CHECK(partition["counts"] == json{{"B", 4}, {"L", 6}, {"F", 6}, {"S", 4}});

  const auto toric = json::parse(run(cmd_enumerate, EnumerateOptions{4, "toric-classes", false}));
  CHECK(toric["singleton_count"] == 4);
  CHECK(toric["class_count"] == 8);

  CHECK_THROWS_AS(run(cmd_enumerate, EnumerateOptions{11, "tn", false}), UsageError);
  CHECK_THROWS_AS(run(cmd_enumerate, EnumerateOptions{4, "nothing", false}), UsageError);
}

TEST_CASE("verify single claims and aliases") {
  const auto thm1 = json::parse(run(cmd_verify, VerifyOptions{"thm1", 5, false, false, {}}));
  CHECK(thm1["status"] == "verified");
  CHECK(thm1["details"]["computed_order"] == 12);

  const auto prop = json::parse(run(cmd_verify, VerifyOptions{"prop5.8", 7, false, false, {}}));
  CHECK(prop["status"] == "verified");
  CHECK(prop["details"]["expected_degree"] == 10);

  const auto thm2 = json::parse(run(cmd_verify, VerifyOptions{"thm2", 4, false, false, {}}));
  CHECK(thm2["details"]["computed_order"] == 10);
  CHECK(thm2["details"]["aut_order"] == 240);

  CHECK_THROWS_AS(run(cmd_verify, VerifyOptions{"no-such-claim", 5, false, false, {}}), UsageError);
  const auto outside = json::parse(run(cmd_verify, VerifyOptions{"octahedron-map", 5, false, false, {}}, exit_usage));
  CHECK(outside["status"] == "not-applicable");
}

TEST_CASE("verify all at n = 5 covers the registry and is deterministic") {
  const VerifyOptions options{"all", 5, false, false, {}};
  const std::string first = run(cmd_verify, options);
  CHECK(first == run(cmd_verify, options));
  const auto report = json::parse(first);
  std::set<std::string> keys;
  for (const auto& r : report["reports"]) {
    keys.insert(r["claim"].get<std::string>());
    CHECK(r["status"] != "failed");
    CHECK(r["status"] != "skipped-budget");
    CHECK_FALSE(r.contains("wall_time_ms"));
  }
  CHECK(keys.size() == claim_registry().size());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(first == read_golden("verify_all_n5.json"));
}

TEST_CASE("failed reports carry a counterexample") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& claim : claim_registry()) {
      const auto report = run_claim(claim, n, btcayley::Budget());
      if (report.status == ClaimStatus::failed) CHECK(report.counterexample.has_value());
    }
}

TEST_CASE("budget exhaustion is reported as skipped-budget") {
  const ClaimSpec slow{"slow", {}, "always out of time", 1, 10, [](int, const btcayley::Budget&) -> ClaimOutcome {
                         throw btcayley::BudgetExceeded("slow: exceeded budget");
                       }};
  const auto report = run_claim(slow, 4, btcayley::Budget());
  CHECK(report.status == ClaimStatus::skipped_budget);
  CHECK(to_string(report.status) == "skipped-budget");
}

TEST_CASE("distance") {
  auto same = json::parse(run(cmd_distance, DistanceOptions{4, "[1 2 3 4]", "[1 2 3 4]", false, false, {}}));
  CHECK(same["distance"] == 0);
  auto one = json::parse(run(cmd_distance, DistanceOptions{5, "[1 2 3 4 5]", "[2 3 4 5 1]", true, false, {}}));
  CHECK(one["distance"] == 1);
  CHECK(one["moves"] == json::array({"s(0,1,5)"}));
  auto reverse = json::parse(run(cmd_distance, DistanceOptions{4, "[1 2 3 4]", "[4 3 2 1]", false, false, {}}));
  CHECK(reverse["distance"] == 3);  // full BFS over Sym_4
  CHECK_THROWS_AS(run(cmd_distance, DistanceOptions{4, "[1 2 3]", "[1 2 3 4]", false, false, {}}), UsageError);
  CHECK_THROWS_AS(run(cmd_distance, DistanceOptions{4, "[1 2 2 4]", "[1 2 3 4]", false, false, {}}), UsageError);
}

TEST_CASE("export") {
  const std::string gamma = run(cmd_export, ExportOptions{5, "gamma", "edges", "", {}});
  CHECK(count_lines(gamma) == 60);
  CHECK(gamma == run(cmd_export, ExportOptions{5, "gamma", "edges", "", {}}));

  const auto faces = json::parse(run(cmd_export, ExportOptions{3, "map-faces", "json", "", {}}));
  CHECK(faces["face_count"] == 8);
  CHECK(faces["faces"].size() == 8);
  CHECK(faces["euler_characteristic"] == 2);

  const std::string dot = run(cmd_export, ExportOptions{5, "gamma-v", "dot", "", {}});
  CHECK(dot.rfind("graph \"gamma_v_5\" {", 0) == 0);
  CHECK(count_lines(dot) == 1 + 12 + 18 + 1);
  const auto gv = json::parse(run(cmd_export, ExportOptions{5, "gamma-v", "json", "", {}}));
  CHECK(gv["vertex_count"] == 12);
  CHECK(gv["edge_count"] == 18);

  CHECK(run(cmd_export, ExportOptions{3, "map-faces", "json", "", {}}) == read_golden("octahedron_faces.json"));
  CHECK(run(cmd_export, ExportOptions{5, "gamma-v", "edges", "", {}}) == read_golden("gamma_v_5.edges"));

  CHECK_THROWS_AS(run(cmd_export, ExportOptions{7, "cayley", "edges", "", {}}), UsageError);
  CHECK_THROWS_AS(run(cmd_export, ExportOptions{5, "gamma", "svg", "", {}}), UsageError);
  CHECK_THROWS_AS(run(cmd_export, ExportOptions{3, "map-faces", "dot", "", {}}), UsageError);
  CHECK_THROWS_AS(run(cmd_export, ExportOptions{4, "map-faces", "json", "bar-f-n", {}}), UsageError);
}

TEST_CASE("claim listing") {
  std::ostringstream out;
  REQUIRE(cmd_list_claims(false, out) == exit_ok);
  const auto list = json::parse(out.str());
  CHECK(list.size() == claim_registry().size());
  for (const auto& alias : {"thm1", "thm2", "prop5.8"}) CHECK(find_claim(alias) != nullptr);
}
