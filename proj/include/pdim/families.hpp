#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdim/graph.hpp"
#include "pdim/resolve.hpp"

namespace pdim {

// Named graph families. Joins number the left operand first, so a clique
// block written on the left of a join gets the smallest labels.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);                // K_{1,n-1}, centre 0
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
/// K_{n-2} join two independent vertices.
Graph clique_split_graph(int n);
/// Two adjacent vertices joined to n-2 independent ones.
Graph independent_split_graph(int n);
/// K_{n-1} with a leaf hanging from vertex 0.
Graph clique_with_leaf(int n);

/// The fifteen graphs with partition dimension n-2. Accepts n >= 7.
Graph h_graph(int i, int n);

/// Graphs once claimed to have partition dimension n-2, i in {1,2,3,5},
/// n >= 7. The remaining members of that list are not reconstructible.
Graph f_graph(int i, int n);

/// Complete k-ary tree of height 2: root 0, children 1..k, child i has
/// leaves k + (i-1)k + 1 .. k + ik.
Graph k_ary_tree(int k);
/// The part {x_i and the i-th leaf below every child} for i = 1..k, plus {root}.
Partition k_ary_tree_partition(int k);

/// Tree with twin number k and partition dimension h (k >= 1, h >= k+2):
/// x = 0, z = 1, leaves of z at 2..k+1, then the (h-1)^2 vertices x_(i,j)
/// adjacent to x, then one pendant y_(i,j) on each of them.
Graph pendant_pair_tree(int k, int h);
Partition pendant_pair_tree_partition(int k, int h);
int pendant_pair_tree_x(int k, int h, int i, int j);  // 1-based (i,j)
int pendant_pair_tree_y(int k, int h, int i, int j);

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kEmpty,
  kStar,
  kBiclique,
  kCliqueSplit,
  kIndependentSplit,
  kCliqueLeaf,
  kH,
  kF,
  kKaryTree,
  kPendantPairTree,
};

struct FamilySpec {
  Family family = Family::kPath;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// "path:5", "cycle:6", "complete:4", "empty:3", "star:9", "biclique:2:7",
/// "split:7" (K_{n-2} join 2K_1), "cosplit:7" (n-2 independent join K_2),
/// "leafclique:7", "H:3:9", "F:1:9", "Tk2:3", "Tstar:2:4".
/// Throws GraphError on unknown names or malformed text; generate throws
/// DomainError for parameters out of range.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

}  // namespace pdim
