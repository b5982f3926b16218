// rw — command-line front end for the rose window graph library.
//
// Subcommands: classify, survey, verify-paper, export, aut, is-cayley.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rw/autgroup.hpp"
#include "rw/cayley.hpp"
#include "rw/checks.hpp"
#include "rw/classify.hpp"
#include "rw/config.hpp"
#include "rw/errors.hpp"
#include "rw/graph.hpp"
#include "rw/params.hpp"
#include "rw/survey.hpp"
#include "rw/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct ParamArgs {
  int n = 0, a = 0, r = 0;
  rw::RoseWindowParams params() const { return {n, a, r}; }
};

void add_param_args(CLI::App* cmd, ParamArgs& p) {
  cmd->add_option("n", p.n, "number of rim (= hub) vertices")->required();
  cmd->add_option("a", p.a, "outspoke offset")->required();
  cmd->add_option("r", p.r, "hub step")->required();
}

/// Writes to the given path, or to stdout when the path is empty.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitUsage;
  }
  body(out);
  return kExitOk;
}

int cmd_classify(const ParamArgs& args, bool json, bool search) {
  const auto params = args.params();
  const auto report = search ? rw::classify_with_search(params) : rw::classify(params);
  if (json)
    std::cout << rw::classification_to_json(report) << "\n";
  else
    std::cout << rw::classification_to_text(report);
  return kExitOk;
}

int cmd_survey(int max_n, int jobs, const std::string& out_path) {
  rw::SurveyResult result{};
  const int rc = with_output(out_path, [&](std::ostream& out) {
    result = rw::run_survey(max_n, out, jobs);
  });
  if (rc != kExitOk) return rc;
  std::cerr << "survey: " << result.records << " records, " << result.disagreements
            << " disagreements, " << result.capacity_errors << " capacity errors\n";
  return result.disagreements == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(int criterion) {
  const int failures = rw::run_verification_checks(std::cout, criterion);
  if (failures != 0) {
    std::cout << failures << " check(s) failed\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_export(const ParamArgs& args, const std::string& format, const std::string& out_path) {
  const rw::RWGraph g(args.params());
  const std::string payload = format == "dot" ? g.export_dot() : g.export_json();
  return with_output(out_path, [&](std::ostream& out) { out << payload; });
}

int cmd_aut(const ParamArgs& args, const std::string& method, bool json) {
  const rw::RWGraph g(args.params());
  const auto mode =
      method == "paper" ? rw::AutMethod::Distinguished : rw::AutMethod::Generic;
  const auto result = rw::automorphism_group(g, mode);
  const auto orbits = rw::edge_orbits(g, result.group);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = args.n;
    j["a"] = args.a;
    j["r"] = args.r;
    j["method"] = rw::aut_method_name(result.method);
    j["order"] = result.group.order();
    j["vertex_transitive"] = result.group.is_transitive();
    j["vertex_orbits"] = result.group.orbits().size();
    j["edge_orbits"] = orbits.count;
    j["generators"] = nlohmann::ordered_json::array();
    for (const auto& gen : result.group.generators())
      j["generators"].push_back(rw::to_cycle_string(gen));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rw::to_string(args.params()) << " [" << rw::aut_method_name(result.method)
              << "]\n";
    std::cout << "  |G| = " << result.group.order() << "\n";
    std::cout << "  vertex-transitive: " << (result.group.is_transitive() ? "yes" : "no")
              << " (" << result.group.orbits().size() << " vertex orbit(s))\n";
    std::cout << "  edge orbits: " << orbits.count
              << (orbits.rim_hub_merged ? " (a rim and a hub edge share an orbit)" : "")
              << "\n";
    std::cout << "  generators (" << result.group.generators().size() << "):\n";
    for (const auto& gen : result.group.generators())
      std::cout << "    " << rw::to_cycle_string(gen) << "\n";
  }
  return kExitOk;
}

int cmd_is_cayley(const ParamArgs& args, bool json, bool no_cache,
                  std::optional<unsigned> seed) {
  rw::CayleyOptions options;
  options.use_cache = !no_cache;
  options.shuffle_seed = seed;
  const auto verdict = rw::is_cayley_search(args.params(), options);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = args.n;
    j["a"] = args.a;
    j["r"] = args.r;
    j["is_cayley"] = verdict.is_cayley;
    if (verdict.witness)
      j["witness"] = nlohmann::json::parse(rw::witness_to_json(*verdict.witness));
    j["stats"] = {{"group_order", verdict.stats.group_order},
                  {"nodes", verdict.stats.nodes},
                  {"transitivity_shortcut", verdict.stats.transitivity_shortcut},
                  {"exhaustive", verdict.stats.exhaustive},
                  {"witness_first", verdict.stats.witness_first},
                  {"cache_hit", verdict.stats.cache_hit},
                  {"seconds", verdict.stats.seconds}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rw::to_string(args.params()) << ": "
              << (verdict.is_cayley ? "Cayley" : "not Cayley") << "\n";
    if (verdict.witness) {
      std::cout << "  witness: " << rw::witness_case_name(verdict.witness->kind)
                << ", regular subgroup of order " << verdict.witness->order << " with "
                << verdict.witness->generators.size() << " generator(s)\n";
    }
    std::cout << "  |Aut| = " << verdict.stats.group_order;
    if (verdict.stats.cache_hit) std::cout << ", cached verdict";
    if (verdict.stats.transitivity_shortcut) std::cout << ", not vertex-transitive";
    if (verdict.stats.exhaustive)
      std::cout << ", exhaustive search (" << verdict.stats.nodes << " nodes)";
    if (verdict.stats.witness_first) std::cout << ", constructive witness";
    std::cout << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"rose window graphs: classification, automorphisms, Cayley-ness"};
  app.set_version_flag("--version", std::string(rw::version()));
  app.require_subcommand(1);

  // classify
  ParamArgs classify_args;
  bool classify_json = false, classify_search = false;
  auto* classify = app.add_subcommand(
      "classify", "arithmetic classification (families, transitivity, Cayley-ness)");
  add_param_args(classify, classify_args);
  classify->add_flag("--json", classify_json, "single-line JSON output");
  classify->add_flag("--search", classify_search,
                     "also compute search verdicts (|Aut|, orbits, Cayley search)");

  // survey
  int survey_max_n = 0, survey_jobs = 1;
  std::string survey_out;
  auto* survey = app.add_subcommand(
      "survey", "sweep all normalized (n,a,r) with n <= max-n; JSONL records");
  survey->add_option("--max-n", survey_max_n, "largest n to include")->required();
  survey->add_option("--jobs", survey_jobs, "worker threads")->default_val(1);
  survey->add_option("--out", survey_out, "output file (default stdout)");

  // verify-paper
  int verify_criterion = 0;
  auto* verify = app.add_subcommand(
      "verify-paper", "run the verification suite (relations, orders, searches)");
  verify->add_option("--criterion", verify_criterion,
                     "run only the checks for one acceptance criterion (1-9)")
      ->check(CLI::Range(1, 9));

  // export
  ParamArgs export_args;
  std::string export_format = "dot", export_out;
  auto* exp = app.add_subcommand("export", "write the graph as DOT or JSON");
  add_param_args(exp, export_args);
  exp->add_option("--format", export_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", export_out, "output file (default stdout)");

  // aut
  ParamArgs aut_args;
  std::string aut_method = "generic";
  bool aut_json = false;
  auto* aut = app.add_subcommand("aut", "automorphism group and orbit structure");
  add_param_args(aut, aut_args);
  aut->add_option("--method", aut_method,
                  "generic (full group) or paper (distinguished-generator closure)")
      ->check(CLI::IsMember({"generic", "paper"}));
  aut->add_flag("--json", aut_json, "single-line JSON output");

  // is-cayley
  ParamArgs cayley_args;
  bool cayley_json = false, cayley_no_cache = false;
  std::optional<unsigned> cayley_seed;
  auto* cayley = app.add_subcommand(
      "is-cayley", "decide Cayley-ness (witness or exhaustive search)");
  add_param_args(cayley, cayley_args);
  cayley->add_flag("--json", cayley_json, "single-line JSON output");
  cayley->add_flag("--no-cache", cayley_no_cache, "ignore and do not write the witness cache");
  cayley->add_option("--seed", cayley_seed,
                     "shuffle seed for the search candidate order (verdict-invariant)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_args, classify_json, classify_search);
    if (survey->parsed()) return cmd_survey(survey_max_n, survey_jobs, survey_out);
    if (verify->parsed()) return cmd_verify(verify_criterion);
    if (exp->parsed()) return cmd_export(export_args, export_format, export_out);
    if (aut->parsed()) return cmd_aut(aut_args, aut_method, aut_json);
    if (cayley->parsed())
      return cmd_is_cayley(cayley_args, cayley_json, cayley_no_cache, cayley_seed);
  } catch (const rw::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const rw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
