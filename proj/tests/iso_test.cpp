#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "pdim/families.hpp"
#include "pdim/graph_io.hpp"
#include "pdim/iso.hpp"
#include "support.hpp"

namespace pdim {
namespace {

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), star_graph(4)));
  EXPECT_FALSE(are_isomorphic(h_graph(7, 9), h_graph(6, 9)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), path_graph(5)));
}

TEST(Isomorphism, CubicPairOnEightVertices) {
  // Two cubic graphs on 8 vertices: the cube and the twisted prism.
  const Graph cube = from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                        {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const Graph twisted = from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                           {0, 4}, {1, 5}, {2, 7}, {3, 6}});
  EXPECT_EQ(cube.edge_count(), twisted.edge_count());
  EXPECT_NE(canonical_form(cube), canonical_form(twisted));
  EXPECT_FALSE(are_isomorphic(cube, twisted));
  // Beyond the canonical limit only pairwise testing is available.
  testing::Rng rng(5);
  const Graph big = cycle_graph(30);
  EXPECT_TRUE(are_isomorphic(big, relabel(big, testing::random_permutation(30, rng))));
  EXPECT_FALSE(are_isomorphic(big, disjoint_union(cycle_graph(15), cycle_graph(15))));
}

TEST(CanonicalForm, ShuffleInvariant) {
  testing::Rng rng(7);
  const CanonicalForm p4 = canonical_form(path_graph(4));
  for (int i = 0; i < 100; ++i) EXPECT_EQ(canonical_form(relabel(path_graph(4), testing::random_permutation(4, rng))), p4);
  const Graph h = h_graph(14, 12);
  const CanonicalForm hf = canonical_form(h);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(canonical_form(relabel(h, testing::random_permutation(12, rng))), hf);
}

TEST(CanonicalForm, StableAcrossRuns) {
  EXPECT_EQ(canonical_form(path_graph(4)).graph6, write_graph6(canonical_graph(path_graph(4))));
  EXPECT_EQ(canonical_form(path_graph(4)).graph6, canonical_form(path_graph(4)).graph6);
  const CanonicalCode code = canonical_code(star_graph(6));
  EXPECT_EQ(graph_of(code), canonical_graph(star_graph(6)));
  EXPECT_EQ(canonical_code(graph_of(code)), code);
}

TEST(CanonicalForm, FourGraphsWithTwinNumberTwoBelowOrder) {
  std::set<CanonicalForm> forms{canonical_form(complete_bipartite(2, 4)), canonical_form(clique_split_graph(6)),
                                canonical_form(independent_split_graph(6)), canonical_form(clique_with_leaf(6))};
  EXPECT_EQ(forms.size(), 4U);
}

TEST(CanonicalForm, RefusesLargeOrders) {
  EXPECT_NO_THROW(canonical_form(path_graph(16)));
  EXPECT_THROW(canonical_form(path_graph(17)), DomainError);
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(enumerate_connected(4).size(), 6U);
  EXPECT_EQ(enumerate_connected(6).size(), 112U);
  for (const Graph& g : enumerate_connected(5)) EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(generate_connected(8).size(), 11117U);
  EXPECT_THROW(enumerate_connected(8), DomainError);
  EXPECT_THROW(enumerate_connected(0), DomainError);
  EXPECT_THROW(generate_connected(10), DomainError);
}

TEST(Catalog, RoundTripsOrderSeven) {
  std::stringstream file;
  const std::vector<Graph> graphs = enumerate_connected(7);
  for (const Graph& g : graphs) file << write_graph6(g) << '\n';
  CatalogReader reader(file);
  std::set<CanonicalForm> read;
  while (auto g = reader.next()) read.insert(canonical_form(*g));
  EXPECT_EQ(reader.count(), 853U);
  EXPECT_EQ(reader.orders().at(7), 853U);
  std::set<CanonicalForm> expected;
  for (const Graph& g : graphs) expected.insert(canonical_form(g));
  EXPECT_EQ(read, expected);
}

TEST(Catalog, EmptyStream) {
  std::istringstream empty("");
  CatalogReader reader(empty);
  EXPECT_FALSE(reader.next().has_value());
  EXPECT_EQ(reader.count(), 0U);
}

TEST(Catalog, CorruptLineAfterGoodOnes) {
  std::istringstream file("A_\n\nBw\nD?\x7f\nDFw\n");
  std::vector<Graph> seen;
  try {
    for_each_in_catalog(file, [&seen](const Graph& g) { seen.push_back(g); });
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
  EXPECT_EQ(seen.size(), 2U);
}

TEST(Catalog, MixedOrdersAreReported) {
  std::istringstream file("A_\nBw\nBw\n");
  CatalogReader reader(file);
  while (reader.next()) {
  }
  EXPECT_EQ(reader.orders().at(2), 1U);
  EXPECT_EQ(reader.orders().at(3), 2U);
}

}  // namespace
}  // namespace pdim
