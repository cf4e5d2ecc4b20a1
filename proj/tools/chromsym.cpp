// chromsym: chromatic symmetric functions, their e/h/s expansions, and
// exhaustive verification of the signed-tableau identities behind them.
// Every number printed is exact.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chromsym/csf.hpp"
#include "chromsym/orderstruct.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/tableaux.hpp"
#include "chromsym/verify.hpp"

namespace {

using namespace chromsym;

int run_csf(const std::string& graph_file, const std::string& basis_name, bool json, bool tsv) {
  Graph g = read_graph_file(graph_file);
  SymFunc x = convert(chromatic_symmetric_function(g), parse_basis(basis_name));
  if (json) {
    std::cout << x.to_json() << '\n';
  } else if (tsv) {
    const auto& parts = partitions_of(x.degree);
    std::cout << "partition\tcoefficient\n";
    for (size_t i = 0; i < parts.size(); ++i)
      std::cout << to_string(parts[i]) << '\t' << x.coeffs[i] << '\n';
  } else {
    std::cout << x.pretty() << '\n';
  }
  return 0;
}

int run_coeffs(const std::string& poset_file, bool json, bool tsv) {
  Poset p = read_poset_file(poset_file);
  CsfReport r = csf_report(p, poset_file);
  if (json)
    std::cout << r.to_json() << '\n';
  else if (tsv)
    std::cout << r.to_tsv();
  else
    std::cout << r.pretty();
  return 0;
}

int run_orientations(const std::string& graph_file) {
  Graph g = read_graph_file(graph_file);
  long long total = 0;
  for (auto [sinks, count] : acyclic_orientation_sink_counts(g)) {
    std::cout << sinks << (sinks == 1 ? " sink: " : " sinks: ") << count << '\n';
    total += count;
  }
  std::cout << "total acyclic: " << total << '\n';
  return 0;
}

int run_tableaux(const std::string& poset_file, const std::string& shape_text) {
  Poset p = read_poset_file(poset_file);
  Partition shape = parse_partition(shape_text);
  auto tableaux = enumerate_p_tableaux(p, shape);
  for (const auto& t : tableaux) std::cout << t.render() << '\n';
  std::cout << "count = " << tableaux.size() << '\n';
  return 0;
}

int run_srht(const std::string& shape_text, const std::string& type_text) {
  Partition shape = parse_partition(shape_text);
  std::optional<Partition> type;
  if (!type_text.empty()) type = parse_partition(type_text);
  auto tabloids = enumerate_srht(shape, type);
  for (const auto& t : tabloids) std::cout << t.render() << '\n';
  std::cout << "count = " << tabloids.size() << '\n';
  return 0;
}

int emit_report(const VerifyReport& report, bool json) {
  std::cout << (json ? report.to_json() + "\n" : report.pretty());
  return report.passed() ? kExitPass : kExitIdentityFailure;
}

int run_verify(const std::string& suite, int max_n, int jobs, bool json) {
  if (suite == "gasharov") return emit_report(verify_gasharov(max_n < 0 ? 5 : max_n, jobs), json);
  if (suite == "theorem1") return emit_report(verify_theorem1(max_n < 0 ? 5 : max_n, jobs), json);
  if (suite == "lemma1") return emit_report(verify_lemma1(max_n < 0 ? 5 : max_n, jobs), json);
  if (suite == "sigma") return emit_report(verify_sigma(max_n < 0 ? 5 : max_n, jobs), json);
  if (suite == "sink-theorem")
    return emit_report(verify_sink_theorem(max_n < 0 ? 6 : max_n, max_n < 0 ? 5 : std::min(max_n, 5), jobs),
                       json);
  if (suite == "ordinal-sum")
    return emit_report(verify_ordinal_sum_identity(max_n < 0 ? 6 : max_n, jobs), json);
  std::cerr << "unknown suite '" << suite
            << "' (expected gasharov|theorem1|lemma1|sink-theorem|sigma|ordinal-sum)\n";
  return 1;
}

int run_scan(int max_n, int jobs, bool json, const std::string& witness_file) {
  EPositivityScan scan = scan_e_positivity(max_n, jobs);
  std::cout << (json ? scan.report.to_json() + "\n" : scan.report.pretty());
  if (!scan.report.passed()) {
    std::ofstream out(witness_file);
    out << "[";
    for (size_t i = 0; i < scan.witness_json.size(); ++i)
      out << (i ? "," : "") << scan.witness_json[i];
    out << "]\n";
    std::cerr << scan.report.failures.size()
              << " conjecture violation(s); witnesses written to " << witness_file << '\n';
    return kExitConjectureViolation;
  }
  std::cout << "0 violations\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic symmetric function toolkit (exact arithmetic)"};
  app.require_subcommand(1);

  std::string graph_file, poset_file, shape_text, type_text, basis_name = "m";
  std::string suite, scan_target, witness_file = "witness.json";
  int max_n = -1, jobs = 1;
  bool json = false, tsv = false;

  auto* csf_cmd = app.add_subcommand("csf", "expand X_G of a graph in a chosen basis");
  csf_cmd->add_option("--graph", graph_file, "graph file")->required();
  csf_cmd->add_option("--basis", basis_name, "target basis: m|e|h|s");
  csf_cmd->add_flag("--json", json);
  csf_cmd->add_flag("--tsv", tsv);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "full coefficient report for a poset");
  coeffs_cmd->add_option("--poset", poset_file, "poset file")->required();
  coeffs_cmd->add_flag("--json", json);
  coeffs_cmd->add_flag("--tsv", tsv);

  auto* orient_cmd = app.add_subcommand("orientations", "acyclic orientation sink counts");
  orient_cmd->add_option("--graph", graph_file, "graph file")->required();

  auto* tab_cmd = app.add_subcommand("tableaux", "P-tableaux of a shape");
  tab_cmd->add_option("--poset", poset_file, "poset file")->required();
  tab_cmd->add_option("--shape", shape_text, "shape, e.g. 2,1")->required();

  auto* srht_cmd = app.add_subcommand("srht", "special rim hook tabloids of a shape");
  srht_cmd->add_option("--shape", shape_text, "shape, e.g. 2,2")->required();
  srht_cmd->add_option("--type", type_text, "restrict to this type");

  auto* verify_cmd = app.add_subcommand("verify", "run an executable theorem suite");
  verify_cmd->add_option("suite", suite, "gasharov|theorem1|lemma1|sink-theorem|sigma|ordinal-sum")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "instance size bound (suite default if omitted)");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_flag("--json", json);

  auto* scan_cmd = app.add_subcommand("scan", "conjecture scan");
  scan_cmd->add_option("target", scan_target, "e-positivity")->required();
  scan_cmd->add_option("--max-n", max_n, "poset size bound");
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_option("--witness", witness_file, "witness output file on violation");
  scan_cmd->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (csf_cmd->parsed()) return run_csf(graph_file, basis_name, json, tsv);
    if (coeffs_cmd->parsed()) return run_coeffs(poset_file, json, tsv);
    if (orient_cmd->parsed()) return run_orientations(graph_file);
    if (tab_cmd->parsed()) return run_tableaux(poset_file, shape_text);
    if (srht_cmd->parsed()) return run_srht(shape_text, type_text);
    if (verify_cmd->parsed()) return run_verify(suite, max_n, jobs, json);
    if (scan_cmd->parsed()) {
      if (scan_target != "e-positivity") {
        std::cerr << "unknown scan target '" << scan_target << "'\n";
        return 1;
      }
      return run_scan(max_n < 0 ? 6 : max_n, jobs, json, witness_file);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
