#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdim/graph.hpp"
#include "pdim/twins.hpp"

namespace pdim {

/// A partition of V into k non-empty parts, stored as a per-vertex part index.
class Partition {
 public:
  /// Part indices must cover 0..k-1 with no gaps.
  static Partition from_assignment(std::vector<int> part_of);
  /// Parts must be non-empty, pairwise disjoint and cover 0..n-1.
  static Partition from_parts(int n, const std::vector<VertexMask>& parts);
  static Partition singletons(int n);

  int order() const { return static_cast<int>(part_of_.size()); }
  int size() const { return static_cast<int>(parts_.size()); }
  int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
  VertexMask part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<VertexMask>& parts() const { return parts_; }
  const std::vector<int>& assignment() const { return part_of_; }

  /// Relabels parts by first occurrence along vertex order (a restricted
  /// growth string).
  Partition normalized() const;
  /// "{0,3} {1} {2,4}" with parts in index order.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(std::vector<int> part_of, std::vector<VertexMask> parts)
      : part_of_(std::move(part_of)), parts_(std::move(parts)) {}

  std::vector<int> part_of_;
  std::vector<VertexMask> parts_;
};

using DistanceVector = std::vector<int>;

/// r(u|pi): entry i is d(u, S_i).
DistanceVector distance_vector(const DistanceMatrix& dm, const Partition& pi, int u);

struct LocatingCheck {
  bool locating = false;
  /// A pair of vertices with equal distance vectors when not locating.
  std::optional<std::pair<int, int>> failing_pair;
  explicit operator bool() const { return locating; }
};

LocatingCheck is_locating_partition(const DistanceMatrix& dm, const Partition& pi);
bool is_locating_set(const DistanceMatrix& dm, VertexMask s);

/// Twin pairs sharing a part (never allowed in a locating partition).
bool separates_twins(const TwinDecomposition& td, const Partition& pi);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t partitions_tested = 0;
  double wall_ms = 0.0;
};

struct MetricDimensionResult {
  int value = 0;
  VertexMask witness = 0;
  SearchStats stats;
};

/// Exact metric dimension by subset search in increasing size. Every
/// locating set keeps all but at most one vertex of each twin class.
MetricDimensionResult metric_dimension(const Graph& g);

enum class BoundReason {
  kTrivial,          // 1 for K_1, 2 otherwise
  kTwinNumber,       // tau <= beta_p
  kCliqueTwinSet,    // tau + 1 for a clique tau-set, G != K_n
  kComplete,         // beta_p(K_n) = n
  kPendantPairs,     // leaf-pendant pairs with a common attachment
  kSingletons,       // all-singleton partition
  kDiameter,         // n - diam + 1
  kDegreePairing,    // n - min{deg u, n-1-deg u}
  kHalfComplement,   // n - k/2 for a clique tau-set with tau > n/2
  kFalseTwinExact,   // tau for an independent tau-set with tau > n/2
  kDistinguishing,   // tau + 1 from a W-distinguishing vertex
  kMetricDimension,  // beta + 1
};

std::string_view to_string(BoundReason reason);

struct LowerBound {
  int value = 1;
  BoundReason reason = BoundReason::kTrivial;
};

struct UpperBound {
  int value = 1;
  BoundReason reason = BoundReason::kSingletons;
  Partition witness = Partition::singletons(1);
};

struct Bounds {
  LowerBound lower;
  UpperBound upper;
};

struct BoundOptions {
  /// Adds beta + 1; skipped when the twin lower bound for beta leaves more
  /// than max_metric_subsets candidate subsets.
  bool use_metric_dimension = false;
  std::uint64_t max_metric_subsets = 200000;
};

/// Vertices with one leaf neighbour and a common remaining neighbourhood
/// need pairwise distinct vectors; with m of them this returns the least t
/// with t^2 - t + 1 >= m (1 when there are none).
int pendant_pair_bound(const Graph& g);

LowerBound bp_lower_bounds(const Graph& g, const TwinDecomposition& td);
UpperBound bp_upper_bounds(const Graph& g, const TwinDecomposition& td,
                           const BoundOptions& options = {});
Bounds bp_bounds(const Graph& g, const TwinDecomposition& td, const BoundOptions& options = {});

// Constructive locating partitions. Each throws DomainError when its
// precondition fails.

/// Vertices at distances 1..diam from a peripheral vertex share one part.
Partition construct_diametral(const Graph& g);
/// Pairs a neighbour with a non-neighbour of u, min{deg u, n-1-deg u} times.
Partition construct_degree_pairing(const Graph& g, int u);
/// Independent unique tau-set W with tau > n/2; size exactly tau.
Partition construct_false_twin(const Graph& g, VertexMask w);
/// Clique unique tau-set W with tau > n/2, G != K_n; size <= n - (n-tau)/2.
Partition construct_kmedios(const Graph& g, VertexMask w);
/// v a W-distinguishing vertex of the clique tau-set W, tau > n/2; size tau+1.
Partition construct_distinguishing(const Graph& g, VertexMask w, int v);
/// Locating set S: singletons of S plus V\S.
Partition construct_from_locating_set(const Graph& g, VertexMask s);

struct SolveOptions {
  std::uint64_t budget = 1'000'000'000ULL;  // search nodes
  int threads = 1;                          // 0 = hardware concurrency
  BoundOptions bounds;
};

enum class SolveStatus { kExact, kUnknown };

struct LevelRecord {
  int parts = 0;
  bool found = false;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t partitions_tested = 0;
};

struct PartitionDimensionResult {
  SolveStatus status = SolveStatus::kExact;
  /// Exact value; for kUnknown the best upper bound.
  int value = 0;
  /// Lexicographically least optimal RGS in search order (kExact), or the
  /// upper-bound witness (kUnknown).
  Partition witness = Partition::singletons(1);
  Bounds bounds;
  /// Highest part count proven infeasible (bounds or exhaustion).
  int proven_lower = 0;
  SearchStats stats;
  std::vector<LevelRecord> levels;
};

enum class LevelOutcome { kFound, kExhausted, kBudget };

struct LevelResult {
  LevelOutcome outcome = LevelOutcome::kExhausted;
  std::optional<Partition> witness;
  SearchStats stats;
};

/// Exhaustive search for a locating partition with exactly k parts.
LevelResult search_level(const Graph& g, int k, const SolveOptions& options = {});

/// Exact partition dimension. Throws DomainError on disconnected input.
PartitionDimensionResult partition_dimension(const Graph& g, const SolveOptions& options = {});

/// Unpruned reference enumeration; refuses n > 8.
PartitionDimensionResult partition_dimension_naive(const Graph& g);

struct LargeTwinClassification {
  int order = 0;
  int tau = 0;
  VertexMask tau_set = 0;
  TwinKind kind = TwinKind::kSingleton;
  /// Predicted closed interval for beta_p.
  int predicted_min = 0;
  int predicted_max = 0;
  bool exact() const { return predicted_min == predicted_max; }
};

/// tau > n/2, G != K_n: independent tau-set gives beta_p = tau, clique
/// tau-set gives tau < beta_p <= (n+tau)/2.
LargeTwinClassification classify_large_twin(const Graph& g);

}  // namespace pdim
