#include "pdim/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "pdim/families.hpp"
#include "pdim/graph_io.hpp"

namespace pdim {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool witness_ok(const Graph& g, const Partition& pi, int size) {
  return pi.size() == size && is_locating_partition(DistanceMatrix(g), pi).locating;
}

const char* status_name(SolveStatus s) { return s == SolveStatus::kExact ? "exact" : "unknown"; }

}  // namespace

int VerificationReport::failed_cases() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass; }));
}

void VerificationReport::add(CaseRecord record) {
  if (!record.pass && !record.graph6.empty()) counterexamples.push_back(record.graph6);
  cases.push_back(std::move(record));
}

nlohmann::json to_json(const VerificationReport& report, bool with_runtime) {
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseRecord& c : report.cases) {
    nlohmann::json j{{"id", c.id},         {"graph6", c.graph6},   {"expected", c.expected},
                     {"observed", c.observed}, {"witness", c.witness}, {"method", c.method},
                     {"pass", c.pass}};
    if (with_runtime) j["runtime_ms"] = c.runtime_ms;
    cases.push_back(std::move(j));
  }
  return {{"suite", report.suite},
          {"params", report.params},
          {"summary", report.summary},
          {"cases", std::move(cases)},
          {"pass", report.pass()},
          {"counterexamples", report.counterexamples},
          {"version", kReportVersion}};
}

VerificationReport suite_table2(int max_n) {
  if (max_n < 2 || max_n > 12) throw DomainError("table2: need 2 <= max_n <= 12");
  VerificationReport report;
  report.suite = "table2";
  report.params = {{"max_n", max_n}};

  struct Row {
    std::string id;
    Graph g;
    int beta, tau, bp;
  };
  std::vector<Row> rows;
  for (int n = 4; n <= max_n; ++n) rows.push_back({"path:" + std::to_string(n), path_graph(n), 1, 1, 2});
  for (int n = 5; n <= max_n; ++n) rows.push_back({"cycle:" + std::to_string(n), cycle_graph(n), 2, 1, 3});
  for (int n = 3; n <= max_n; ++n) rows.push_back({"star:" + std::to_string(n), star_graph(n), n - 2, n - 1, n - 1});
  for (int k = 2; 2 * k <= max_n; ++k) {
    rows.push_back({"biclique:" + std::to_string(k) + ":" + std::to_string(k), complete_bipartite(k, k), 2 * k - 2, k,
                    k + 1});
  }
  for (int n = 5; n <= max_n; ++n) {
    for (int k = 2; k < n - k; ++k) {
      rows.push_back({"biclique:" + std::to_string(k) + ":" + std::to_string(n - k), complete_bipartite(k, n - k),
                      n - 2, n - k, n - k});
    }
  }
  for (int n = 2; n <= max_n; ++n) rows.push_back({"complete:" + std::to_string(n), complete_graph(n), n - 1, n, n});

  for (const Row& row : rows) {
    const auto start = Clock::now();
    const int beta = metric_dimension(row.g).value;
    const int tau = twin_decomposition(row.g).twin_number;
    const PartitionDimensionResult bp = partition_dimension(row.g);
    CaseRecord c;
    c.id = row.id;
    c.graph6 = write_graph6(row.g);
    c.expected = {{"beta", row.beta}, {"tau", row.tau}, {"beta_p", row.bp}};
    c.observed = {{"beta", beta}, {"tau", tau}, {"beta_p", bp.value}, {"status", status_name(bp.status)}};
    c.witness = bp.witness.to_string();
    c.method = "exact";
    c.pass = beta == row.beta && tau == row.tau && bp.status == SolveStatus::kExact && bp.value == row.bp &&
             witness_ok(row.g, bp.witness, bp.value);
    c.runtime_ms = elapsed_ms(start);
    report.add(std::move(c));
  }
  report.summary = {{"rows", rows.size()}};
  return report;
}

VerificationReport suite_twin_n_minus_2(int min_n, int max_n) {
  if (min_n < 4 || max_n > 7 || min_n > max_n) throw DomainError("twin_n_minus_2: need 4 <= n <= 7");
  VerificationReport report;
  report.suite = "twin_n_minus_2";
  report.params = {{"min_n", min_n}, {"max_n", max_n}};
  for (int n = min_n; n <= max_n; ++n) {
    const auto start = Clock::now();
    const std::vector<Graph> all = enumerate_connected(n);
    CaseRecord census;
    census.id = "census:" + std::to_string(n);
    census.expected = {{"connected_classes", connected_graph_count(n)}};
    census.observed = {{"connected_classes", all.size()}};
    census.method = "edge-subset sweep";
    census.pass = all.size() == connected_graph_count(n);
    census.runtime_ms = elapsed_ms(start);
    report.add(std::move(census));

    std::set<CanonicalCode> found;
    for (const Graph& g : all) {
      if (twin_decomposition(g).twin_number == n - 2) found.insert(canonical_code(g));
    }
    const std::vector<std::pair<std::string, Graph>> generators{
        {"split:" + std::to_string(n), clique_split_graph(n)},
        {"leafclique:" + std::to_string(n), clique_with_leaf(n)},
        {"biclique:2:" + std::to_string(n - 2), complete_bipartite(2, n - 2)},
        {"cosplit:" + std::to_string(n), independent_split_graph(n)},
    };
    std::set<CanonicalCode> expected;
    for (const auto& [id, g] : generators) {
      const CanonicalCode code = canonical_code(g);
      expected.insert(code);
      CaseRecord c;
      c.id = id;
      c.graph6 = write_graph6(g);
      c.expected = {{"tau", n - 2}, {"found", true}};
      c.observed = {{"tau", twin_decomposition(g).twin_number}, {"found", found.count(code) > 0}};
      c.method = "canonical form";
      c.pass = found.count(code) > 0;
      report.add(std::move(c));
    }
    for (const CanonicalCode& code : found) {
      if (expected.count(code)) continue;
      CaseRecord c;
      c.id = "unexpected:" + std::to_string(n);
      c.graph6 = write_graph6(graph_of(code));
      c.expected = {{"generator", true}};
      c.observed = {{"generator", false}};
      c.method = "canonical form";
      report.add(std::move(c));
    }
    report.summary[std::to_string(n)] = {{"tau_n_minus_2", found.size()}, {"generator_classes", expected.size()}};
  }
  return report;
}

std::size_t connected_graph_count(int n) {
  static const std::size_t counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};
  return n >= 1 && n <= 10 ? counts[n] : 0;
}

GraphSource catalog_source(std::istream& in) {
  return [&in](const GraphVisitor& visit) { for_each_in_catalog(in, visit); };
}

GraphSource graphs_source(const std::vector<Graph>& graphs) {
  return [&graphs](const GraphVisitor& visit) {
    for (const Graph& g : graphs) visit(g);
  };
}

LargeTwinCensus census_large_twin(int n, const GraphSource& source, int threads, const SolveOptions& options) {
  if (n < 2 || n > kMaxCanonicalOrder) throw DomainError("census: need 2 <= n <= 16");
  LargeTwinCensus census;
  census.order = n;
  std::set<CanonicalCode> seen;
  source([&](const Graph& g) {
    ++census.read;
    if (g.order() != n) {
      ++census.wrong_order;
      return;
    }
    if (!is_connected(g)) {
      ++census.disconnected;
      return;
    }
    const TwinDecomposition td = twin_decomposition(g);
    if (n >= kTwinFilterMinOrder && 2 * td.twin_number <= n) {
      ++census.filtered;
      return;
    }
    const CanonicalCode code = canonical_code(g);
    if (!seen.insert(code).second) {
      ++census.duplicates;
      return;
    }
    CensusEntry e;
    e.graph = graph_of(code);
    e.code = code;
    e.tau = td.twin_number;
    e.kind = td.kinds[static_cast<std::size_t>(td.tau_sets.front())];
    census.survivors.push_back(std::move(e));
  });
  std::sort(census.survivors.begin(), census.survivors.end(),
            [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });

  SolveOptions per_graph = options;
  per_graph.threads = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < census.survivors.size(); i = next++) {
      census.survivors[i].result = partition_dimension(census.survivors[i].graph, per_graph);
    }
  };
  const int pool_size = std::max(1, threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < pool_size; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return census;
}

namespace {

nlohmann::json census_summary(const LargeTwinCensus& census) {
  std::size_t unknown = 0;
  std::map<std::string, std::size_t> by_value;
  for (const CensusEntry& e : census.survivors) {
    if (e.result.status == SolveStatus::kUnknown) {
      ++unknown;
    } else {
      ++by_value[std::to_string(e.result.value)];
    }
  }
  return {{"read", census.read},
          {"wrong_order", census.wrong_order},
          {"disconnected", census.disconnected},
          {"filtered_tau_at_most_half", census.filtered},
          {"duplicates", census.duplicates},
          {"solved", census.survivors.size()},
          {"unknown", unknown},
          {"by_partition_dimension", by_value}};
}

/// Shared checks on the catalog itself.
void add_catalog_cases(VerificationReport& report, const LargeTwinCensus& census) {
  const std::size_t expected = connected_graph_count(census.order);
  CaseRecord c;
  c.id = "catalog";
  c.expected = {{"graphs", expected}, {"wrong_order", 0}, {"disconnected", 0}, {"duplicates", 0}};
  c.observed = {{"graphs", census.read - census.wrong_order - census.disconnected},
                {"wrong_order", census.wrong_order},
                {"disconnected", census.disconnected},
                {"duplicates", census.duplicates}};
  c.method = "catalog audit";
  c.pass = census.wrong_order == 0 && census.disconnected == 0 && census.duplicates == 0 &&
           (expected == 0 || census.read == expected);
  report.add(std::move(c));
  for (const CensusEntry& e : census.survivors) {
    if (e.result.status == SolveStatus::kExact) continue;
    CaseRecord u;
    u.id = "unsolved";
    u.graph6 = write_graph6(e.graph);
    u.expected = {{"status", "exact"}};
    u.observed = {{"status", "unknown"}, {"upper", e.result.value}, {"lower", e.result.proven_lower}};
    u.method = "exact solve";
    report.add(std::move(u));
  }
}

std::map<CanonicalCode, const CensusEntry*> with_value(const LargeTwinCensus& census, int value) {
  std::map<CanonicalCode, const CensusEntry*> out;
  for (const CensusEntry& e : census.survivors) {
    if (e.result.status == SolveStatus::kExact && e.result.value == value) out.emplace(e.code, &e);
  }
  return out;
}

nlohmann::json entry_json(const CensusEntry& e) {
  return {{"tau", e.tau}, {"tau_kind", to_string(e.kind)}, {"beta_p", e.result.value}};
}

}  // namespace

VerificationReport suite_bp_n_minus_1(const LargeTwinCensus& census) {
  const int n = census.order;
  VerificationReport report;
  report.suite = "bp_n_minus_1";
  report.params = {{"n", n}, {"outside_hypothesis", n < 9}};
  add_catalog_cases(report, census);

  const auto found = with_value(census, n - 1);
  const std::vector<std::pair<std::string, Graph>> generators{
      {"star:" + std::to_string(n), star_graph(n)},
      {"split:" + std::to_string(n), clique_split_graph(n)},
      {"leafclique:" + std::to_string(n), clique_with_leaf(n)},
  };
  std::set<CanonicalCode> expected;
  for (const auto& [id, g] : generators) {
    const CanonicalCode code = canonical_code(g);
    expected.insert(code);
    const auto it = found.find(code);
    CaseRecord c;
    c.id = id;
    c.graph6 = write_graph6(g);
    c.expected = {{"beta_p", n - 1}};
    c.observed = it == found.end() ? nlohmann::json{{"beta_p", nullptr}} : entry_json(*it->second);
    if (it != found.end()) c.witness = it->second->result.witness.to_string();
    c.method = "catalog exact solve";
    c.pass = it != found.end();
    report.add(std::move(c));
  }
  for (const auto& [code, e] : found) {
    if (expected.count(code)) continue;
    CaseRecord c;
    c.id = "unexpected";
    c.graph6 = write_graph6(e->graph);
    c.expected = {{"beta_p", "at most n-2"}};
    c.observed = entry_json(*e);
    c.witness = e->result.witness.to_string();
    c.method = "catalog exact solve";
    report.add(std::move(c));
  }

  // Two-case condition on (tau, kind) for every solved survivor.
  CaseRecord cond;
  cond.id = "two-case condition";
  cond.method = "tau = n-1, or tau = n-2 with a clique tau-set";
  std::size_t mismatches = 0;
  for (const CensusEntry& e : census.survivors) {
    if (e.result.status != SolveStatus::kExact) continue;
    const bool predicted = e.tau == n - 1 || (e.tau == n - 2 && e.kind == TwinKind::kTrue);
    if (predicted != (e.result.value == n - 1)) {
      ++mismatches;
      report.counterexamples.push_back(write_graph6(e.graph));
    }
  }
  cond.expected = {{"mismatches", 0}};
  cond.observed = {{"mismatches", mismatches}};
  cond.pass = mismatches == 0;
  report.cases.push_back(std::move(cond));

  report.summary = census_summary(census);
  report.summary["found"] = found.size();
  return report;
}

VerificationReport suite_bp_n_minus_2(const LargeTwinCensus& census) {
  const int n = census.order;
  VerificationReport report;
  report.suite = "bp_n_minus_2";
  report.params = {{"n", n}, {"outside_hypothesis", n < 9}};
  add_catalog_cases(report, census);

  const auto found = with_value(census, n - 2);
  std::map<CanonicalCode, int> h_index;
  for (int i = 1; i <= 15; ++i) {
    const Graph g = h_graph(i, n);
    const CanonicalCode code = canonical_code(g);
    const bool distinct = h_index.emplace(code, i).second;
    const auto it = found.find(code);
    const TwinDecomposition td = twin_decomposition(g);
    const TwinKind kind = td.kinds[static_cast<std::size_t>(td.tau_sets.front())];
    // Case 1: tau = n-2, independent; case 2: n-3, clique; case 3: n-4, clique.
    const int predicted_case = i <= 2 ? 1 : (i <= 10 ? 2 : 3);
    const int observed_case = td.twin_number == n - 2 && kind == TwinKind::kFalse   ? 1
                              : td.twin_number == n - 3 && kind == TwinKind::kTrue ? 2
                              : td.twin_number == n - 4 && kind == TwinKind::kTrue ? 3
                                                                                    : 0;
    CaseRecord c;
    c.id = "H:" + std::to_string(i) + ":" + std::to_string(n);
    c.graph6 = write_graph6(g);
    c.expected = {{"beta_p", n - 2}, {"case", predicted_case}, {"distinct", true}};
    c.observed = {{"beta_p", it == found.end() ? nlohmann::json(nullptr) : nlohmann::json(it->second->result.value)},
                  {"case", observed_case},
                  {"distinct", distinct},
                  {"canonical", write_graph6(graph_of(code))}};
    if (it != found.end()) c.witness = it->second->result.witness.to_string();
    c.method = "catalog exact solve";
    c.pass = it != found.end() && distinct && observed_case == predicted_case;
    report.add(std::move(c));
  }
  for (const auto& [code, e] : found) {
    if (h_index.count(code)) continue;
    CaseRecord c;
    c.id = "unexpected";
    c.graph6 = write_graph6(e->graph);
    c.expected = {{"member", "H"}};
    c.observed = entry_json(*e);
    c.witness = e->result.witness.to_string();
    c.method = "catalog exact solve";
    report.add(std::move(c));
  }
  for (int i : {1, 2, 3, 5}) {
    const Graph g = f_graph(i, n);
    const bool listed = found.count(canonical_code(g)) > 0;
    CaseRecord c;
    c.id = "F:" + std::to_string(i) + ":" + std::to_string(n);
    c.graph6 = write_graph6(g);
    c.expected = {{"beta_p_n_minus_2", false}};
    c.observed = {{"beta_p_n_minus_2", listed}};
    c.method = "catalog exact solve";
    c.pass = !listed;
    report.add(std::move(c));
  }
  report.summary = census_summary(census);
  report.summary["found"] = found.size();
  return report;
}

VerificationReport suite_refutation(const std::vector<int>& ns) {
  VerificationReport report;
  report.suite = "refutation";
  report.params = {{"n", ns}};
  for (int n : ns) {
    if (n < 7) throw DomainError("refutation: need n >= 7");
    for (int i : {1, 2, 3, 5}) {
      const auto start = Clock::now();
      const Graph g = f_graph(i, n);
      const PartitionDimensionResult r = partition_dimension(g);
      const LevelResult below = search_level(g, n - 4);
      CaseRecord c;
      c.id = "F:" + std::to_string(i) + ":" + std::to_string(n);
      c.graph6 = write_graph6(g);
      c.expected = {{"beta_p", n - 3}, {"level_n_minus_4", "exhausted"}};
      c.observed = {{"beta_p", r.value},
                    {"status", status_name(r.status)},
                    {"level_n_minus_4", below.outcome == LevelOutcome::kExhausted ? "exhausted" : "not exhausted"},
                    {"nodes", r.stats.nodes_expanded + below.stats.nodes_expanded}};
      c.witness = r.witness.to_string();
      c.method = "exact solve; exhaustive search at n-4";
      c.pass = r.status == SolveStatus::kExact && r.value == n - 3 && witness_ok(g, r.witness, n - 3) &&
               below.outcome == LevelOutcome::kExhausted;
      c.runtime_ms = elapsed_ms(start);
      report.add(std::move(c));
    }
  }
  return report;
}

VerificationReport suite_realization(std::uint64_t budget) {
  VerificationReport report;
  report.suite = "realization";
  report.params = {{"budget", budget}};

  struct Target {
    int a, b;
    std::string spec;
    std::optional<Partition> proof;  // partition from the construction
    bool solve;                      // exact search expected to be cheap
  };
  const std::vector<Target> targets{
      {1, 1, "path:1", std::nullopt, true},
      {2, 2, "star:3", std::nullopt, true},
      {3, 3, "star:4", std::nullopt, true},
      {1, 2, "path:4", std::nullopt, true},
      {2, 3, "Tk2:2", k_ary_tree_partition(2), true},
      {3, 4, "Tk2:3", k_ary_tree_partition(3), true},
      {4, 5, "Tk2:4", k_ary_tree_partition(4), true},
      {1, 3, "Tstar:1:3", pendant_pair_tree_partition(1, 3), true},
      {2, 4, "Tstar:2:4", pendant_pair_tree_partition(2, 4), false},
      {3, 5, "Tstar:3:5", pendant_pair_tree_partition(3, 5), false},
  };
  for (const Target& t : targets) {
    const auto start = Clock::now();
    const Graph g = generate(parse_family_spec(t.spec));
    const TwinDecomposition td = twin_decomposition(g);
    const LowerBound lb = bp_lower_bounds(g, td);
    int lower = lb.value;
    std::string lower_method = std::string(to_string(lb.reason)) + " bound";
    int upper = g.order();
    std::string upper_method = "singletons";
    std::string witness;
    bool proof_ok = true;
    if (t.proof) {
      proof_ok = witness_ok(g, *t.proof, t.b);
      if (proof_ok) {
        upper = t.b;
        upper_method = "construction partition";
        witness = t.proof->to_string();
      }
    }
    SolveOptions options;
    options.budget = budget;
    const PartitionDimensionResult r = partition_dimension(g, options);
    if (r.status == SolveStatus::kExact) {
      if (r.value > lower) lower_method = "exact solve";
      if (r.value < upper || !t.proof) upper_method = "exact solve";
      lower = std::max(lower, r.value);
      upper = std::min(upper, r.value);
      if (witness.empty()) witness = r.witness.to_string();
    } else {
      lower = std::max(lower, r.proven_lower);
      upper = std::min(upper, r.value);
    }
    CaseRecord c;
    c.id = t.spec;
    c.graph6 = write_graph6(g);
    c.expected = {{"tau", t.a}, {"beta_p", t.b}};
    c.observed = {{"tau", td.twin_number},
                  {"lower", lower},
                  {"lower_method", lower_method},
                  {"upper", upper},
                  {"upper_method", upper_method},
                  {"solver", status_name(r.status)},
                  {"exactness", lower == upper ? "exact" : "partial"}};
    c.witness = witness;
    c.method = t.solve ? "exact solve" : "bounds with construction partition; solve under budget";
    c.pass = td.twin_number == t.a && proof_ok && lower <= t.b && upper == t.b && (!t.solve || lower == upper);
    c.runtime_ms = elapsed_ms(start);
    report.add(std::move(c));
  }
  return report;
}

}  // namespace pdim
