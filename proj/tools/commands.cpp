#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>

#include "btcayley/block_transposition.hpp"
#include "btcayley/cayley_map.hpp"
#include "btcayley/distance.hpp"
#include "btcayley/export.hpp"
#include "btcayley/gamma.hpp"
#include "btcayley/graph.hpp"
#include "btcayley/toric.hpp"
#include "claims.hpp"

namespace btcayley::cli {

namespace {

void require_n(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw UsageError(what + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got n = " +
                     std::to_string(n));
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json cut_json(const CutPoints& c) {
  return Json{{"i", c.i()}, {"j", c.j()}, {"k", c.k()}, {"class", to_string(classify(c))},
              {"permutation", to_string(make_bt(c))}};
}

int enumerate_tn_rows(int n, bool pretty, std::ostream& out) {
  const auto tn = enumerate_tn(n);
  if (pretty) {
    out << "T_" << n << ": " << tn.size() << " block transpositions\n";
    for (const auto& c : tn)
      out << std::left << std::setw(12) << to_string(c) << std::setw(3) << to_string(classify(c))
          << to_string(make_bt(c)) << '\n';
    return exit_ok;
  }
  Json rows = Json::array();
  for (const auto& c : tn) rows.push_back(cut_json(c));
  emit(out, Json{{"n", n}, {"count", tn.size()}, {"rows", rows}});
  return exit_ok;
}

int enumerate_partition(int n, bool pretty, std::ostream& out) {
  std::map<std::string, std::vector<CutPoints>> classes{{"B", {}}, {"L", {}}, {"F", {}}, {"S", {}}};
  for (const auto& c : enumerate_tn(n)) classes[to_string(classify(c))].push_back(c);
  const std::vector<std::string> order{"B", "L", "F", "S"};
  if (pretty) {
    for (const auto& cls : order) {
      out << cls << " (" << classes[cls].size() << "):";
      for (const auto& c : classes[cls]) out << ' ' << to_string(c);
      out << '\n';
    }
    return exit_ok;
  }
  Json counts;
  Json members;
  for (const auto& cls : order) {
    counts[cls] = classes[cls].size();
    Json list = Json::array();
    for (const auto& c : classes[cls]) list.push_back(to_string(c));
    members[cls] = list;
  }
  emit(out, Json{{"n", n}, {"counts", counts}, {"classes", members}});
  return exit_ok;
}

int enumerate_toric_classes(int n, bool pretty, std::ostream& out) {
  const std::uint64_t total = factorial(n);
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::map<std::size_t, std::size_t> histogram;
  std::vector<std::vector<Permutation>> listed;
  const bool list_classes = n <= 6;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    const auto cls = toric_class(Permutation::unrank(r, n));
    for (const auto& pi : cls) seen[static_cast<std::size_t>(pi.rank())] = true;
    ++histogram[cls.size()];
    if (list_classes) listed.push_back(cls);
  }
  std::size_t class_count = 0;
  for (const auto& [size, count] : histogram) class_count += count;
  const std::size_t singletons = histogram.contains(1) ? histogram.at(1) : 0;
  if (pretty) {
    out << "toric classes of Sym_" << n << ": " << class_count << '\n'
        << "singleton classes: " << singletons << " (phi(" << n + 1 << ") = " << euler_phi(n + 1) << ")\n";
    for (const auto& [size, count] : histogram) out << "  size " << size << ": " << count << '\n';
    for (const auto& cls : listed) {
      for (std::size_t t = 0; t < cls.size(); ++t) out << (t ? " " : "  ") << to_string(cls[t]);
      out << '\n';
    }
    return exit_ok;
  }
  Json sizes = Json::object();
  for (const auto& [size, count] : histogram) sizes[std::to_string(size)] = count;
  Json j{{"n", n}, {"class_count", class_count}, {"singleton_count", singletons}, {"euler_phi", euler_phi(n + 1)},
         {"size_histogram", sizes}};
  if (list_classes) {
    Json classes = Json::array();
    for (const auto& cls : listed) {
      Json members = Json::array();
      for (const auto& pi : cls) members.push_back(to_string(pi));
      classes.push_back(members);
    }
    j["classes"] = classes;
  }
  emit(out, j);
  return exit_ok;
}

void print_report_row(const ClaimReport& report, bool timing, std::ostream& out) {
  out << std::left << std::setw(28) << report.claim << " n=" << std::setw(3) << report.n << std::setw(16)
      << to_string(report.status);
  if (timing) out << std::fixed << std::setprecision(1) << report.wall_time_ms << " ms";
  if (report.counterexample) out << "  " << report.counterexample->dump();
  out << '\n';
}

Permutation parse_for(int n, const std::string& text, const char* which) {
  Permutation pi;
  try {
    pi = parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(which) + ": " + e.what());
  }
  if (pi.degree() != n)
    throw UsageError(std::string(which) + " has degree " + std::to_string(pi.degree()) + ", expected " +
                     std::to_string(n));
  return pi;
}

ExportFormat parse_format(const std::string& format) {
  if (format == "edges") return ExportFormat::edges;
  if (format == "dot") return ExportFormat::dot;
  if (format == "json") return ExportFormat::json;
  throw UsageError("unknown format '" + format + "' (edges | dot | json)");
}

CayleyMap pick_map(int n, const std::string& which) {
  const std::string chosen = which.empty() ? (n == 3 ? "octahedron" : "bar-f") : which;
  if (chosen == "octahedron") {
    require_n(n, 3, 3, "the octahedron map");
    return octahedron_map();
  }
  if (chosen == "bar-f") {
    require_n(n, 3, 6, "the bar-f map");
    return bar_f_map(n);
  }
  if (chosen == "bar-f-n") {
    require_n(n, 5, 5, "the bar-f-n map");
    return bar_f_n_map();
  }
  throw UsageError("unknown map '" + chosen + "' (octahedron | bar-f | bar-f-n)");
}

}  // namespace

Budget make_budget(std::optional<long long> budget_ms) {
  if (const char* env = std::getenv("BTCAYLEY_BUDGET_MS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end == nullptr || *end != '\0') throw UsageError(std::string("BTCAYLEY_BUDGET_MS is not an integer: ") + env);
    budget_ms = value;
  }
  if (!budget_ms || *budget_ms <= 0) return Budget::unlimited();
  return Budget(std::chrono::milliseconds(*budget_ms));
}

int cmd_enumerate(const EnumerateOptions& options, std::ostream& out) {
  require_n(options.n, 2, 10, "enumerate");
  if (options.what == "tn") return enumerate_tn_rows(options.n, options.pretty, out);
  if (options.what == "partition") return enumerate_partition(options.n, options.pretty, out);
  if (options.what == "toric-classes") return enumerate_toric_classes(options.n, options.pretty, out);
  throw UsageError("unknown listing '" + options.what + "' (tn | partition | toric-classes)");
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  std::vector<const ClaimSpec*> selected;
  if (options.claim == "all") {
    for (const auto& claim : claim_registry()) selected.push_back(&claim);
    std::sort(selected.begin(), selected.end(), [](const ClaimSpec* a, const ClaimSpec* b) { return a->key < b->key; });
  } else if (const ClaimSpec* claim = find_claim(options.claim)) {
    selected.push_back(claim);
  } else {
    throw UsageError("unknown claim '" + options.claim + "'");
  }
  if (options.n < 1) throw UsageError("verify needs --n");
  make_budget(options.budget_ms);  // validates the environment up front

  std::vector<ClaimReport> reports;
  for (const ClaimSpec* claim : selected) reports.push_back(run_claim(*claim, options.n, make_budget(options.budget_ms)));

  bool failed = false;
  bool budget = false;
  for (const auto& r : reports) {
    failed = failed || r.status == ClaimStatus::failed;
    budget = budget || r.status == ClaimStatus::skipped_budget;
  }
  if (options.pretty) {
    for (const auto& r : reports) print_report_row(r, options.timing, out);
  } else if (options.claim != "all") {
    emit(out, reports.front().to_json(options.timing));
  } else {
    Json list = Json::array();
    std::map<std::string, std::size_t> tally;
    for (const auto& r : reports) {
      list.push_back(r.to_json(options.timing));
      ++tally[to_string(r.status)];
    }
    Json summary = Json::object();
    for (const auto& [status, count] : tally) summary[status] = count;
    emit(out, Json{{"n", options.n}, {"summary", summary}, {"reports", list}});
  }
  if (failed) return exit_failed;
  if (budget) return exit_budget;
  // A single claim outside its range was not verified.
  if (options.claim != "all" && reports.front().status == ClaimStatus::not_applicable) return exit_usage;
  return exit_ok;
}

int cmd_distance(const DistanceOptions& options, std::ostream& out) {
  require_n(options.n, 1, 10, "distance");
  const Permutation source = parse_for(options.n, options.source, "source");
  const Permutation target = parse_for(options.n, options.target, "target");
  const Geodesic geodesic = bfs_distance(source, target, make_budget(options.budget_ms));
  if (options.pretty) {
    out << "distance " << geodesic.distance << '\n';
    if (options.emit_path)
      for (std::size_t s = 0; s < geodesic.moves.size(); ++s)
        out << "  " << to_string(geodesic.path[s]) << " -> " << to_string(geodesic.path[s + 1]) << "  by "
            << to_string(geodesic.moves[s]) << '\n';
    return exit_ok;
  }
  Json j{{"n", options.n}, {"source", to_string(source)}, {"target", to_string(target)},
         {"distance", geodesic.distance}};
  if (options.emit_path) {
    Json moves = Json::array();
    for (const auto& c : geodesic.moves) moves.push_back(to_string(c));
    Json path = Json::array();
    for (const auto& pi : geodesic.path) path.push_back(to_string(pi));
    j["moves"] = moves;
    j["path"] = path;
  }
  emit(out, j);
  return exit_ok;
}

int cmd_export(const ExportOptions& options, std::ostream& out) {
  const ExportFormat format = parse_format(options.format);
  const int n = options.n;
  if (options.object == "cayley") {
    require_n(n, 2, 6, "export of Cay(Sym_n, T_n)");
    out << export_graph(build_cayley(n, tn_permutations(n)), format, "cayley_" + std::to_string(n));
  } else if (options.object == "gamma") {
    require_n(n, 2, 10, "export of Gamma");
    out << export_graph(gamma_graph(n), format, "gamma_" + std::to_string(n));
  } else if (options.object == "gamma-v") {
    require_n(n, 4, 10, "export of Gamma(V)");
    out << export_graph(gamma_subgraph(vertex_set_v(n)), format, "gamma_v_" + std::to_string(n));
  } else if (options.object == "map-faces") {
    if (format == ExportFormat::dot) throw UsageError("map-faces supports edges | json");
    const CayleyMap m = pick_map(n, options.map);
    const auto fs = faces(m);
    out << export_faces(m, fs, is_regular(m, make_budget(options.budget_ms)), format);
  } else {
    throw UsageError("unknown object '" + options.object + "' (cayley | gamma | gamma-v | map-faces)");
  }
  return exit_ok;
}

int cmd_list_claims(bool pretty, std::ostream& out) {
  if (pretty) {
    for (const auto& claim : claim_registry()) {
      out << std::left << std::setw(28) << claim.key << claim.min_n << ".." << std::setw(4) << claim.max_n
          << claim.summary;
      if (!claim.aliases.empty()) {
        out << " [";
        for (std::size_t a = 0; a < claim.aliases.size(); ++a) out << (a ? ", " : "") << claim.aliases[a];
        out << ']';
      }
      out << '\n';
    }
    return exit_ok;
  }
  Json list = Json::array();
  for (const auto& claim : claim_registry())
    list.push_back(Json{{"key", claim.key}, {"aliases", claim.aliases}, {"min_n", claim.min_n},
                        {"max_n", claim.max_n}, {"summary", claim.summary}});
  emit(out, list);
  return exit_ok;
}

}  // namespace btcayley::cli
