// btcayley: block transposition Cayley graphs on Sym_n from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "btcayley/budget.hpp"
#include "commands.hpp"

namespace {

using namespace btcayley::cli;

void add_budget(CLI::App* app, std::optional<long long>& budget_ms) {
  app->add_option("--budget-ms", budget_ms, "Search allowance in milliseconds (BTCAYLEY_BUDGET_MS overrides)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block transposition Cayley graphs, toric maps and regular Cayley maps on Sym_n"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write output to a file instead of stdout");

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List T_n, its partition, or the toric classes");
  enumerate_cmd->add_option("--n", enumerate.n, "Degree")->required();
  enumerate_cmd->add_option("--what", enumerate.what, "tn | partition | toric-classes")->required();
  enumerate_cmd->add_flag("--pretty", enumerate.pretty, "Human-readable table");

  VerifyOptions verify;
  std::string claim_flag;
  std::string claim_positional;
  auto* verify_cmd = app.add_subcommand("verify", "Check a registered claim, or all of them");
  verify_cmd->add_option("key", claim_positional, "Claim key or alias, or 'all'");
  verify_cmd->add_option("--claim", claim_flag, "Claim key or alias, or 'all'");
  verify_cmd->add_option("--n", verify.n, "Degree")->required();
  verify_cmd->add_flag("--pretty", verify.pretty, "One line per claim");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time (output is then not reproducible)");
  add_budget(verify_cmd, verify.budget_ms);

  bool list_pretty = false;
  auto* claims_cmd = app.add_subcommand("claims", "List the registered claims");
  claims_cmd->add_flag("--pretty", list_pretty, "Human-readable table");

  DistanceOptions distance;
  auto* distance_cmd = app.add_subcommand("distance", "Block transposition distance between two permutations");
  distance_cmd->add_option("--n", distance.n, "Degree")->required();
  distance_cmd->add_option("source", distance.source, "Source permutation, e.g. \"[1 2 3 4]\"")->required();
  distance_cmd->add_option("target", distance.target, "Target permutation")->required();
  distance_cmd->add_flag("--emit-path", distance.emit_path, "Also print one geodesic");
  distance_cmd->add_flag("--pretty", distance.pretty, "Human-readable output");
  add_budget(distance_cmd, distance.budget_ms);

  ExportOptions exporting;
  auto* export_cmd = app.add_subcommand("export", "Export a graph or the faces of a Cayley map");
  export_cmd->add_option("--n", exporting.n, "Degree")->required();
  export_cmd->add_option("--object", exporting.object, "cayley | gamma | gamma-v | map-faces")->required();
  export_cmd->add_option("--format", exporting.format, "edges | dot | json")->default_val("edges");
  export_cmd->add_option("--map", exporting.map, "octahedron | bar-f | bar-f-n (map-faces only)");
  add_budget(export_cmd, exporting.budget_ms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::ostringstream buffer;
  int code = exit_ok;
  try {
    if (*enumerate_cmd) {
      code = cmd_enumerate(enumerate, buffer);
    } else if (*verify_cmd) {
      if (!claim_flag.empty() && !claim_positional.empty() && claim_flag != claim_positional)
        throw UsageError("claim given twice with different keys");
      verify.claim = claim_flag.empty() ? claim_positional : claim_flag;
      if (verify.claim.empty()) throw UsageError("verify needs a claim key or 'all'");
      code = cmd_verify(verify, buffer);
    } else if (*claims_cmd) {
      code = cmd_list_claims(list_pretty, buffer);
    } else if (*distance_cmd) {
      code = cmd_distance(distance, buffer);
    } else if (*export_cmd) {
      code = cmd_export(exporting, buffer);
    }
  } catch (const UsageError& e) {
    std::cerr << "btcayley: " << e.what() << '\n';
    return exit_usage;
  } catch (const btcayley::BudgetExceeded& e) {
    std::cerr << "btcayley: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::exception& e) {
    std::cerr << "btcayley: " << e.what() << '\n';
    return exit_failed;
  }

  if (output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      std::cerr << "btcayley: cannot write " << output << '\n';
      return exit_usage;
    }
    file << buffer.str();
  }
  return code;
}
