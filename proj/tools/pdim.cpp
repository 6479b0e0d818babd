// Command line front end: invariants, generators, solver, verification
// suites and catalog utilities.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdim/families.hpp"
#include "pdim/graph_io.hpp"
#include "pdim/iso.hpp"
#include "pdim/resolve.hpp"
#include "pdim/twins.hpp"
#include "pdim/verify.hpp"

namespace {

using nlohmann::json;
using namespace pdim;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

/// Failure reported with exit code 2 and a one-line message.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "-" reads one line from stdin; anything with ':' is a family spec.
Graph load_graph(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    if (!std::getline(std::cin, text)) throw CliError("malformed graph6: empty standard input");
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  if (text.find(':') != std::string::npos) {
    try {
      return generate(parse_family_spec(text));
    } catch (const DomainError& e) {
      throw CliError(std::string("bad family parameters: ") + e.what());
    } catch (const GraphError& e) {
      throw CliError(std::string("unknown family: ") + e.what());
    }
  }
  try {
    return parse_graph6(text);
  } catch (const GraphError& e) {
    throw CliError(std::string("malformed graph6: ") + e.what());
  }
}

json stats_json(const SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded}, {"partitions_tested", s.partitions_tested}, {"wall_ms", s.wall_ms}};
}

json bounds_json(const Bounds& b) {
  return {{"lower", b.lower.value},
          {"lower_reason", to_string(b.lower.reason)},
          {"upper", b.upper.value},
          {"upper_reason", to_string(b.upper.reason)}};
}

SolveOptions solve_options(std::uint64_t budget, int threads) {
  SolveOptions o;
  o.budget = budget;
  o.threads = threads;
  return o;
}

int cmd_invariants(const std::string& input, bool with_beta, std::uint64_t budget, int threads) {
  const Graph g = load_graph(input);
  if (!is_connected(g)) throw CliError("graph is disconnected");
  const TwinDecomposition td = twin_decomposition(g);
  json classes = json::array();
  for (std::size_t i = 0; i < td.classes.size(); ++i) {
    classes.push_back({{"vertices", members(td.classes[i])}, {"kind", to_string(td.kinds[i])}});
  }
  const PartitionDimensionResult r = partition_dimension(g, solve_options(budget, threads));
  json out{{"graph6", write_graph6(g)},
           {"n", g.order()},
           {"edges", g.edge_count()},
           {"diameter", diameter(g)},
           {"twin_classes", classes},
           {"tau", td.twin_number},
           {"beta_p", r.value},
           {"status", r.status == SolveStatus::kExact ? "exact" : "unknown"},
           {"proven_lower", r.proven_lower},
           {"bounds", bounds_json(r.bounds)},
           {"witness", r.witness.to_string()},
           {"stats", stats_json(r.stats)}};
  if (with_beta) {
    const MetricDimensionResult m = metric_dimension(g);
    out["beta"] = m.value;
    out["beta_witness"] = members(m.witness);
  }
  std::cout << out.dump(2) << '\n';
  return r.status == SolveStatus::kExact ? kExitPass : kExitError;
}

int cmd_gen(const std::string& spec) {
  std::cout << write_graph6(load_graph(spec)) << '\n';
  return kExitPass;
}

int cmd_solve(const std::string& input, bool naive, std::uint64_t budget, int threads, bool as_json) {
  const Graph g = load_graph(input);
  if (!is_connected(g)) throw CliError("graph is disconnected");
  PartitionDimensionResult r;
  try {
    r = naive ? partition_dimension_naive(g) : partition_dimension(g, solve_options(budget, threads));
  } catch (const DomainError& e) {
    throw CliError(e.what());
  }
  if (as_json) {
    std::cout << json{{"beta_p", r.value},
                      {"status", r.status == SolveStatus::kExact ? "exact" : "unknown"},
                      {"proven_lower", r.proven_lower},
                      {"witness", r.witness.to_string()},
                      {"stats", stats_json(r.stats)}}
                     .dump(2)
              << '\n';
  } else if (r.status == SolveStatus::kExact) {
    std::cout << r.value << '\n' << r.witness.to_string() << '\n';
  }
  if (r.status != SolveStatus::kExact) {
    throw CliError("budget exhausted: partition dimension in [" + std::to_string(r.proven_lower) + ", " +
                   std::to_string(r.value) + "]");
  }
  return kExitPass;
}

LargeTwinCensus load_census(int n, const std::string& catalog, bool generate_catalog, int threads,
                            std::uint64_t budget) {
  if (generate_catalog) {
    if (n > 9) throw CliError("catalog generation is limited to n <= 9");
    const std::vector<Graph> graphs = generate_connected(n);
    return census_large_twin(n, graphs_source(graphs), threads, solve_options(budget, 1));
  }
  if (catalog.empty()) {
    throw CliError("missing catalog: pass --catalog FILE with all connected graphs of order " + std::to_string(n) +
                   " in graph6 (e.g. `geng -c " + std::to_string(n) + "` or `pdim catalog --n " +
                   std::to_string(n) + "`), or use --generate-catalog");
  }
  std::ifstream in(catalog);
  if (!in) throw CliError("missing catalog: cannot open " + catalog);
  return census_large_twin(n, catalog_source(in), threads, solve_options(budget, 1));
}

int cmd_verify(const std::string& suite, int n, bool n_given, const std::string& catalog, bool generate_catalog,
               int threads, std::uint64_t budget, bool no_runtime) {
  VerificationReport report;
  if (suite == "table2") {
    report = suite_table2(n_given ? n : 12);
  } else if (suite == "twin_n_minus_2") {
    report = n_given ? suite_twin_n_minus_2(n, n) : suite_twin_n_minus_2();
  } else if (suite == "refutation") {
    report = n_given ? suite_refutation({n}) : suite_refutation();
  } else if (suite == "realization") {
    report = suite_realization();
  } else if (suite == "bp_n_minus_1" || suite == "bp_n_minus_2") {
    const int order = n_given ? n : 9;
    const LargeTwinCensus census = load_census(order, catalog, generate_catalog, threads, budget);
    report = suite == "bp_n_minus_1" ? suite_bp_n_minus_1(census) : suite_bp_n_minus_2(census);
  } else {
    throw CliError("unknown suite '" + suite + "'");
  }
  std::cout << to_json(report, !no_runtime).dump(2) << '\n';
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_classify(const std::string& catalog, int min_tau, std::uint64_t budget) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (catalog != "-") {
    file.open(catalog);
    if (!file) throw CliError("missing catalog: cannot open " + catalog);
    in = &file;
  }
  std::cout << "canonical_form,n,tau,tau_kind,beta_p_or_bound\n";
  CatalogReader reader(*in);
  while (auto g = reader.next()) {
    if (!is_connected(*g)) continue;
    const TwinDecomposition td = twin_decomposition(*g);
    if (td.twin_number < min_tau) continue;
    const PartitionDimensionResult r = partition_dimension(*g, solve_options(budget, 1));
    const std::string form = g->order() <= kMaxCanonicalOrder ? canonical_form(*g).graph6 : write_graph6(*g);
    const std::string value = r.status == SolveStatus::kExact
                                  ? std::to_string(r.value)
                                  : std::to_string(r.proven_lower) + ".." + std::to_string(r.value);
    std::cout << form << ',' << g->order() << ',' << td.twin_number << ','
              << to_string(td.kinds[static_cast<std::size_t>(td.tau_sets.front())]) << ',' << value << '\n';
  }
  return kExitPass;
}

int cmd_catalog(int n, const std::string& output) {
  const std::vector<Graph> graphs = generate_connected(n);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw CliError("cannot write " + output);
    out = &file;
  }
  for (const Graph& g : graphs) *out << write_graph6(g) << '\n';
  std::cerr << graphs.size() << " connected graphs of order " << n << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition dimension and twin number of small graphs"};
  app.require_subcommand(1);

  std::string input;
  std::uint64_t budget = SolveOptions{}.budget;
  int threads = 1;

  auto* invariants = app.add_subcommand("invariants", "Invariants of a graph6 string or family spec as JSON");
  bool with_beta = false;
  invariants->add_option("graph", input, "graph6, family spec (e.g. H:3:9) or - for stdin")->required();
  invariants->add_flag("--beta", with_beta, "also compute the metric dimension");
  invariants->add_option("--budget", budget, "search node budget");
  invariants->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* gen = app.add_subcommand("gen", "Print a family member as graph6");
  gen->add_option("family", input, "family spec such as star:9, H:1:9, Tstar:2:4")->required();

  auto* solve = app.add_subcommand("solve", "Exact partition dimension and a witness");
  bool naive = false;
  bool as_json = false;
  solve->add_option("graph", input, "graph6, family spec or - for stdin")->required();
  solve->add_flag("--naive", naive, "unpruned enumeration (n <= 8)");
  solve->add_option("--budget", budget, "search node budget");
  solve->add_option("--threads", threads, "worker threads (0 = all cores)");
  solve->add_flag("--json", as_json, "print a JSON record");

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  std::string suite;
  int n = 0;
  std::string catalog;
  bool generate_catalog = false;
  bool no_runtime = false;
  verify->add_option("suite", suite, "table2, twin_n_minus_2, bp_n_minus_1, bp_n_minus_2, refutation, realization")
      ->required();
  auto* n_opt = verify->add_option("--n", n, "order (suite specific)");
  verify->add_option("--catalog", catalog, "graph6 catalog of all connected graphs of order n");
  verify->add_flag("--generate-catalog", generate_catalog, "build the catalog in process (n <= 9)");
  verify->add_option("--threads", threads, "worker threads for catalog solving (0 = all cores)");
  verify->add_option("--budget", budget, "search node budget per graph");
  verify->add_flag("--no-runtime", no_runtime, "omit runtime fields");

  auto* classify = app.add_subcommand("classify", "CSV census of a graph6 catalog");
  int min_tau = 1;
  std::string classify_catalog;
  classify->add_option("--catalog", classify_catalog, "graph6 file or -")->required();
  classify->add_option("--min-tau", min_tau, "skip graphs with smaller twin number");
  classify->add_option("--budget", budget, "search node budget per graph");

  auto* catalog_cmd = app.add_subcommand("catalog", "Write all connected graphs of order n (n <= 9) as graph6");
  int catalog_n = 0;
  std::string output;
  catalog_cmd->add_option("--n", catalog_n, "order")->required()->check(CLI::Range(1, 9));
  catalog_cmd->add_option("--output,-o", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(input, with_beta, budget, threads);
    if (gen->parsed()) return cmd_gen(input);
    if (solve->parsed()) return cmd_solve(input, naive, budget, threads, as_json);
    if (verify->parsed()) {
      return cmd_verify(suite, n, n_opt->count() > 0, catalog, generate_catalog, threads, budget, no_runtime);
    }
    if (classify->parsed()) return cmd_classify(classify_catalog, min_tau, budget);
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_n, output);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const CatalogError& e) {
    std::cerr << "error: malformed catalog: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
