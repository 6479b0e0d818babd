#include <gtest/gtest.h>

#include <algorithm>

#include "pdim/families.hpp"
#include "pdim/graph.hpp"
#include "pdim/resolve.hpp"
#include "pdim/twins.hpp"

namespace pdim {
namespace {

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_edge_list(10, edges);
}

// Smallest locating set size by trying every subset in size order.
int metric_dimension_by_subsets(const Graph& g) {
  const DistanceMatrix dm(g);
  const int n = g.order();
  for (int size = 0; size <= n; ++size)
    for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
      if (popcount(s) != size) continue;
      std::vector<std::vector<int>> rows;
      for (int v = 0; v < n; ++v) {
        std::vector<int> r;
        for (int x : members(s)) r.push_back(dm.at(v, x));
        rows.push_back(r);
      }
      std::sort(rows.begin(), rows.end());
      if (std::adjacent_find(rows.begin(), rows.end()) == rows.end()) return size;
    }
  return n;
}

int solve(const Graph& g) {
  const PartitionDimensionResult r = partition_dimension(g);
  EXPECT_EQ(r.status, SolveStatus::kExact);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(g), r.witness));
  EXPECT_EQ(r.witness.size(), r.value);
  return r.value;
}

TEST(PartitionType, Validation) {
  const Partition p = Partition::from_assignment({1, 0, 1, 2});
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.part(1), mask_of({0, 2}));
  EXPECT_EQ(p.normalized().assignment(), (std::vector<int>{0, 1, 0, 2}));
  EXPECT_EQ(p.to_string(), "{1} {0,2} {3}");
  EXPECT_THROW(Partition::from_assignment({0, 2}), GraphError);
  EXPECT_THROW(Partition::from_assignment({}), GraphError);
  EXPECT_THROW(Partition::from_parts(3, {mask_of({0, 1}), mask_of({1, 2})}), GraphError);
  EXPECT_THROW(Partition::from_parts(3, {mask_of({0, 1})}), GraphError);
  EXPECT_THROW(Partition::from_parts(3, {mask_of({0, 1, 2}), 0}), GraphError);
  EXPECT_EQ(Partition::from_parts(3, {mask_of({2}), mask_of({0, 1})}).part_of(2), 0);
}

TEST(DistanceVector, OwnPartIsZeroAndSingletonsGiveRows) {
  const Graph g = h_graph(8, 9);
  const DistanceMatrix dm(g);
  const Partition pi = Partition::from_assignment({0, 1, 2, 0, 1, 2, 0, 1, 2});
  for (int u = 0; u < 9; ++u) EXPECT_EQ(distance_vector(dm, pi, u)[pi.part_of(u)], 0);
  const Partition single = Partition::singletons(9);
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v) EXPECT_EQ(distance_vector(dm, single, u)[v], dm.at(u, v));
}

// Independent part 0..n-4, an edge on n-3,n-2, and n-1 alone; three mixed
// pairs and singletons.
Partition mixed_pairs_partition(int n) {
  std::vector<VertexMask> parts{mask_of({0, n - 3}), mask_of({1, n - 2}), mask_of({2, n - 1})};
  for (int v = 3; v <= n - 4; ++v) parts.push_back(bit(v));
  return Partition::from_parts(n, parts);
}

TEST(DistanceVector, MixedPairsAreSeparatedByAnIndependentSingleton) {
  const Graph g = f_graph(1, 9);
  const DistanceMatrix dm(g);
  const Partition pi = mixed_pairs_partition(9);
  ASSERT_EQ(pi.size(), 6);
  const int alone = pi.part_of(3);
  EXPECT_EQ(distance_vector(dm, pi, 0)[alone], 2);
  EXPECT_EQ(distance_vector(dm, pi, 6)[alone], 1);
  EXPECT_TRUE(is_locating_partition(dm, pi));
  for (int n = 7; n <= 12; ++n)
    EXPECT_TRUE(is_locating_partition(DistanceMatrix(f_graph(1, n)), mixed_pairs_partition(n))) << n;
}

TEST(Locating, PartitionChecker) {
  const Graph g = cycle_graph(7);
  const DistanceMatrix dm(g);
  EXPECT_TRUE(is_locating_partition(dm, Partition::singletons(7)));
  const LocatingCheck one = is_locating_partition(dm, Partition::from_assignment(std::vector<int>(7, 0)));
  EXPECT_FALSE(one);
  ASSERT_TRUE(one.failing_pair.has_value());
  EXPECT_NE(one.failing_pair->first, one.failing_pair->second);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(pendant_pair_tree(2, 4)), pendant_pair_tree_partition(2, 4)));
}

TEST(Locating, SetChecker) {
  for (int n = 2; n <= 10; ++n) {
    const DistanceMatrix p(path_graph(n));
    EXPECT_TRUE(is_locating_set(p, bit(0)));
    EXPECT_TRUE(is_locating_set(p, all_vertices(n)));
  }
  for (int n = 4; n <= 10; ++n) {
    const DistanceMatrix c(cycle_graph(n));
    for (int v = 0; v < n; ++v) EXPECT_FALSE(is_locating_set(c, bit(v)));
  }
}

TEST(MetricDimension, Examples) {
  EXPECT_EQ(metric_dimension(star_graph(9)).value, 7);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(metric_dimension(complete_graph(n)).value, n - 1);
  EXPECT_EQ(metric_dimension(path_graph(7)).value, 1);
  EXPECT_EQ(metric_dimension(cycle_graph(8)).value, 2);
  const Graph p = petersen();
  const MetricDimensionResult r = metric_dimension(p);
  EXPECT_EQ(r.value, metric_dimension_by_subsets(p));
  EXPECT_EQ(r.value, 3);
  EXPECT_TRUE(is_locating_set(DistanceMatrix(p), r.witness));
  EXPECT_THROW(metric_dimension(empty_graph(3)), DomainError);
}

TEST(LowerBounds, Examples) {
  const Graph k27 = complete_bipartite(2, 7);
  EXPECT_GE(bp_lower_bounds(k27, twin_decomposition(k27)).value, 7);
  const Graph h3 = h_graph(3, 9);
  const LowerBound h = bp_lower_bounds(h3, twin_decomposition(h3));
  EXPECT_GE(h.value, 7);
  EXPECT_EQ(h.reason, BoundReason::kCliqueTwinSet);
  const Graph p5 = path_graph(5);
  const LowerBound p = bp_lower_bounds(p5, twin_decomposition(p5));
  EXPECT_EQ(p.value, 2);
  EXPECT_EQ(p.reason, BoundReason::kTrivial);
  const Graph k6 = complete_graph(6);
  EXPECT_EQ(bp_lower_bounds(k6, twin_decomposition(k6)).value, 6);
  EXPECT_EQ(bp_lower_bounds(Graph(), twin_decomposition(Graph())).value, 1);
}

TEST(LowerBounds, PendantPairs) {
  EXPECT_EQ(pendant_pair_bound(path_graph(6)), 1);
  for (auto [k, h] : {std::pair{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}) {
    const Graph t = pendant_pair_tree(k, h);
    const LowerBound lb = bp_lower_bounds(t, twin_decomposition(t));
    EXPECT_EQ(pendant_pair_bound(t), h);
    EXPECT_EQ(lb.value, h);
    EXPECT_EQ(lb.reason, BoundReason::kPendantPairs);
  }
}

TEST(UpperBounds, Examples) {
  const Graph f1 = f_graph(1, 9);
  EXPECT_LE(bp_upper_bounds(f1, twin_decomposition(f1)).value, 6);
  const Graph c9 = cycle_graph(9);
  const UpperBound c = bp_upper_bounds(c9, twin_decomposition(c9));
  EXPECT_LE(c.value, 6);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(c9), c.witness));
  EXPECT_EQ(construct_diametral(c9).size(), 9 - 4 + 1);
  const Graph k27 = complete_bipartite(2, 7);
  const UpperBound b = bp_upper_bounds(k27, twin_decomposition(k27));
  EXPECT_EQ(b.value, 7);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(k27), b.witness));
}

TEST(UpperBounds, MetricDimensionOption) {
  const Graph c = cycle_graph(12);
  BoundOptions with;
  with.use_metric_dimension = true;
  const UpperBound u = bp_upper_bounds(c, twin_decomposition(c), with);
  EXPECT_EQ(u.value, 3);
  EXPECT_EQ(u.reason, BoundReason::kMetricDimension);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(c), u.witness));
  EXPECT_GT(bp_upper_bounds(c, twin_decomposition(c)).value, 3);
}

TEST(Constructions, DegreePairing) {
  // Vertex 0 has degree 3 in a 9-vertex graph.
  const Graph g = from_edge_list(9, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}, {2, 5}});
  ASSERT_EQ(g.degree(0), 3);
  const Partition p = construct_degree_pairing(g, 0);
  EXPECT_EQ(p.size(), 6);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(g), p));
  const Graph s = star_graph(7);
  EXPECT_EQ(construct_degree_pairing(s, 0), Partition::singletons(7));
}

TEST(Constructions, FalseTwin) {
  const Graph k27 = complete_bipartite(2, 7);
  const Partition p = construct_false_twin(k27, twin_decomposition(k27).unique_tau_set());
  EXPECT_EQ(p.size(), 7);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(k27), p));
  for (int i : {1, 2}) {
    const Graph h = h_graph(i, 9);
    const Partition q = construct_false_twin(h, twin_decomposition(h).unique_tau_set());
    EXPECT_EQ(q.size(), 7);
    EXPECT_TRUE(is_locating_partition(DistanceMatrix(h), q));
  }
  const Graph h3 = h_graph(3, 9);
  EXPECT_THROW(construct_false_twin(h3, twin_decomposition(h3).unique_tau_set()), DomainError);
  EXPECT_THROW(construct_false_twin(path_graph(5), bit(0)), DomainError);
}

TEST(Constructions, HalfComplement) {
  const Graph h5 = h_graph(5, 9);
  const TwinDecomposition td = twin_decomposition(h5);
  ASSERT_EQ(td.twin_number, 6);
  const Partition p = construct_kmedios(h5, td.unique_tau_set());
  EXPECT_LE(p.size(), 7);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(h5), p));

  // Everything outside the clique sees all of it: no far vertices, no
  // universal attachment.
  const Graph g = join(complete_graph(6), empty_graph(3));
  const Partition q = construct_kmedios(g, twin_decomposition(g).unique_tau_set());
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(g), q));
  EXPECT_LE(2 * q.size(), 2 * 9 - 3);

  EXPECT_THROW(construct_kmedios(complete_graph(6), all_vertices(6)), DomainError);
  const Graph k27 = complete_bipartite(2, 7);
  EXPECT_THROW(construct_kmedios(k27, twin_decomposition(k27).unique_tau_set()), DomainError);
}

TEST(Constructions, Distinguishing) {
  const Graph f5 = f_graph(5, 9);
  const TwinDecomposition td = twin_decomposition(f5);
  const VertexMask w = td.unique_tau_set();
  const VertexMask d = distinguishing_vertices(f5, w);
  ASSERT_NE(d, 0U);
  for (int v : members(d)) {
    const Partition p = construct_distinguishing(f5, w, v);
    EXPECT_EQ(p.size(), td.twin_number + 1);
    EXPECT_TRUE(is_locating_partition(DistanceMatrix(f5), p));
  }
  // A single outer neighbour.
  const Graph leaf = clique_with_leaf(9);
  const VertexMask lw = twin_decomposition(leaf).unique_tau_set();
  const VertexMask ld = distinguishing_vertices(leaf, lw);
  ASSERT_NE(ld, 0U);
  EXPECT_EQ(construct_distinguishing(leaf, lw, lowest(ld)).size(), popcount(lw) + 1);
  const Graph h3 = h_graph(3, 9);
  EXPECT_THROW(construct_distinguishing(h3, twin_decomposition(h3).unique_tau_set(), 6), DomainError);
}

TEST(Constructions, FromLocatingSet) {
  const Graph c = cycle_graph(9);
  const Partition p = construct_from_locating_set(c, mask_of({0, 1}));
  EXPECT_EQ(p.size(), 3);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(c), p));
  const Graph path = path_graph(6);
  EXPECT_EQ(construct_from_locating_set(path, bit(0)).size(), 2);
}

TEST(Solver, ClosedFormFamilies) {
  EXPECT_EQ(solve(path_graph(9)), 2);
  EXPECT_EQ(solve(cycle_graph(9)), 3);
  EXPECT_EQ(solve(complete_graph(9)), 9);
  EXPECT_EQ(solve(star_graph(9)), 8);
  EXPECT_EQ(solve(complete_bipartite(4, 4)), 5);
  EXPECT_EQ(solve(complete_bipartite(2, 7)), 7);
  EXPECT_EQ(solve(Graph()), 1);
  EXPECT_EQ(solve(path_graph(2)), 2);
  EXPECT_EQ(solve(petersen()), 4);
}

TEST(Solver, OnceClaimedFamiliesAreOneLower) {
  for (int i : {1, 2, 3, 5}) EXPECT_EQ(solve(f_graph(i, 9)), 6) << i;
}

TEST(Solver, FifteenFamiliesAtTwoBelowOrder) {
  for (int i = 1; i <= 15; ++i) EXPECT_EQ(solve(h_graph(i, 9)), 7) << i;
}

TEST(Solver, LevelSearch) {
  const Graph f1 = f_graph(1, 9);
  EXPECT_EQ(search_level(f1, 5).outcome, LevelOutcome::kExhausted);
  const LevelResult found = search_level(f1, 6);
  ASSERT_EQ(found.outcome, LevelOutcome::kFound);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(f1), *found.witness));
  EXPECT_EQ(found.witness->size(), 6);
}

TEST(Solver, BudgetGivesUnknownWithBounds) {
  SolveOptions tight;
  tight.budget = 50;
  const Graph t = k_ary_tree(4);
  const PartitionDimensionResult r = partition_dimension(t, tight);
  EXPECT_EQ(r.status, SolveStatus::kUnknown);
  EXPECT_EQ(r.value, r.bounds.upper.value);
  EXPECT_TRUE(is_locating_partition(DistanceMatrix(t), r.witness));
  EXPECT_LE(r.proven_lower, r.value);
  EXPECT_EQ(search_level(t, 4, tight).outcome, LevelOutcome::kBudget);
}

TEST(Solver, RejectsDisconnected) {
  const Graph g = disjoint_union(path_graph(3), path_graph(2));
  EXPECT_THROW(partition_dimension(g), DomainError);
  EXPECT_THROW(partition_dimension_naive(g), DomainError);
  EXPECT_THROW(partition_dimension_naive(path_graph(9)), DomainError);
}

TEST(Solver, NaiveExamples) {
  EXPECT_EQ(partition_dimension_naive(path_graph(4)).value, 2);
  EXPECT_EQ(partition_dimension_naive(path_graph(2)).value, 2);
  EXPECT_EQ(partition_dimension_naive(Graph()).value, 1);
}

TEST(LargeTwin, Classification) {
  const Graph k27 = complete_bipartite(2, 7);
  const LargeTwinClassification a = classify_large_twin(k27);
  EXPECT_EQ(a.kind, TwinKind::kFalse);
  EXPECT_TRUE(a.exact());
  EXPECT_EQ(a.predicted_min, 7);
  EXPECT_EQ(solve(k27), 7);

  const Graph h8 = h_graph(8, 9);
  const LargeTwinClassification b = classify_large_twin(h8);
  EXPECT_EQ(b.tau, 6);
  EXPECT_EQ(b.kind, TwinKind::kTrue);
  EXPECT_EQ(b.predicted_min, 7);
  EXPECT_EQ(b.predicted_max, 7);
  EXPECT_EQ(solve(h8), 7);

  EXPECT_THROW(classify_large_twin(complete_graph(9)), DomainError);
  EXPECT_THROW(classify_large_twin(path_graph(9)), DomainError);
}

TEST(BoundReasons, Names) {
  EXPECT_EQ(to_string(BoundReason::kPendantPairs), "pendant-pairs");
  EXPECT_EQ(to_string(BoundReason::kDegreePairing), "degree-pairing");
  EXPECT_EQ(to_string(BoundReason::kMetricDimension), "metric-dimension");
}

}  // namespace
}  // namespace pdim
