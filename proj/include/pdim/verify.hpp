#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdim/graph.hpp"
#include "pdim/iso.hpp"
#include "pdim/resolve.hpp"

namespace pdim {

inline constexpr int kReportVersion = 1;

struct CaseRecord {
  std::string id;
  std::string graph6;  // replayable with `pdim solve`
  nlohmann::json expected;
  nlohmann::json observed;
  std::string witness;
  std::string method;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json summary = nlohmann::json::object();
  std::vector<CaseRecord> cases;
  std::vector<std::string> counterexamples;  // graph6

  bool pass() const { return counterexamples.empty() && failed_cases() == 0; }
  int failed_cases() const;
  /// Records a case; a failing case adds its graph6 to the counterexamples.
  void add(CaseRecord record);
};

/// Runtime fields are dropped when with_runtime is false, which makes two
/// reports of the same run byte-identical.
nlohmann::json to_json(const VerificationReport& report, bool with_runtime = true);

/// Closed forms for paths, cycles, stars, bicliques and cliques, n <= max_n <= 12.
VerificationReport suite_table2(int max_n = 12);

/// Graphs with twin number n-2 among all connected graphs of order n.
VerificationReport suite_twin_n_minus_2(int min_n = 4, int max_n = 7);

/// From order 9 on, twin number at most n/2 forces partition dimension at
/// most n-3, so those graphs are only counted. Smaller orders have
/// exceptions and are solved in full.
inline constexpr int kTwinFilterMinOrder = 9;

/// Catalog graphs of one order with their exact partition dimension, minus
/// the graphs the twin filter above rules out.
struct CensusEntry {
  Graph graph;  // canonically labelled
  CanonicalCode code;
  int tau = 0;
  TwinKind kind = TwinKind::kSingleton;
  PartitionDimensionResult result;
};

struct LargeTwinCensus {
  int order = 0;
  std::size_t read = 0;
  std::size_t wrong_order = 0;
  std::size_t disconnected = 0;
  std::size_t filtered = 0;  // tau <= n/2, order >= 9 only
  std::size_t duplicates = 0;
  std::vector<CensusEntry> survivors;  // sorted by code
};

using GraphVisitor = std::function<void(const Graph&)>;
using GraphSource = std::function<void(const GraphVisitor&)>;

LargeTwinCensus census_large_twin(int n, const GraphSource& source, int threads = 1,
                                  const SolveOptions& options = {});
GraphSource catalog_source(std::istream& in);
GraphSource graphs_source(const std::vector<Graph>& graphs);

/// Known number of connected graphs of order n (0 when not tabulated).
std::size_t connected_graph_count(int n);

/// Partition dimension n-1 over the census.
VerificationReport suite_bp_n_minus_1(const LargeTwinCensus& census);
/// Partition dimension n-2 over the census, matched against the H-graphs.
VerificationReport suite_bp_n_minus_2(const LargeTwinCensus& census);

/// The four F-graphs have partition dimension n-3 for each n in ns (>= 7).
VerificationReport suite_refutation(const std::vector<int>& ns = {9, 10});

/// Trees realising (twin number, partition dimension) pairs.
VerificationReport suite_realization(std::uint64_t budget = 20'000'000);

}  // namespace pdim
