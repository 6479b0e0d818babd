#include "pdim/families.hpp"

#include <charconv>
#include <map>
#include <string>

namespace pdim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Graph k(int n) { return complete_graph(n); }
Graph kbar(int n) { return empty_graph(n); }
Graph plus(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

}  // namespace

Graph path_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "path: need 1 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle: need 3 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_edge_list(n, edges);
}

Graph star_graph(int n) {
  require(n >= 2 && n <= kMaxVertices, "star: need 2 <= n <= 64");
  return join(k(1), kbar(n - 1));
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1 && a + b <= kMaxVertices, "biclique: need a, b >= 1 and a + b <= 64");
  return join(kbar(a), kbar(b));
}

Graph clique_split_graph(int n) {
  require(n >= 3 && n <= kMaxVertices, "split: need 3 <= n <= 64");
  return join(k(n - 2), kbar(2));
}

Graph independent_split_graph(int n) {
  require(n >= 3 && n <= kMaxVertices, "cosplit: need 3 <= n <= 64");
  return join(kbar(n - 2), k(2));
}

Graph clique_with_leaf(int n) {
  require(n >= 3 && n <= kMaxVertices, "leafclique: need 3 <= n <= 64");
  return join(k(1), plus(k(n - 2), k(1)));
}

Graph h_graph(int i, int n) {
  require(i >= 1 && i <= 15, "H: index must be in 1..15");
  require(n >= 7 && n <= kMaxVertices, "H: need 7 <= n <= 64");
  switch (i) {
    case 1:
      return complete_bipartite(2, n - 2);
    case 2:
      return join(kbar(n - 2), k(2));
    case 3:
      return join(k(n - 3), plus(k(2), k(1)));
    case 4:
      return join(k(n - 3), kbar(3));
    case 5:
      return join(plus(k(n - 3), k(1)), k(2));
    case 6:
      return join(plus(k(n - 3), k(1)), kbar(2));
    case 7:  // the K_1 vertex is n-3, the independent pair n-2, n-1
      return remove_edge(h_graph(6, n), n - 3, n - 2);
    case 8:
      return join(plus(k(n - 3), k(2)), k(1));
    case 9:  // the K_2 is n-3, n-2; the K_1 is n-1
      return remove_edge(h_graph(8, n), n - 3, n - 1);
    case 10:
      return join(plus(k(n - 3), kbar(2)), k(1));
    case 11:
      return join(k(n - 4), cycle_graph(4));
    case 12:
      return join(k(n - 4), path_graph(4));
    case 13:
      return join(k(n - 4), plus(k(2), k(2)));
    case 14:  // K_1 is n-4, the path runs n-3, n-2, n-1
      return remove_edge(join(plus(k(n - 4), k(1)), path_graph(3)), n - 4, n - 3);
    case 15:
      return remove_edge(h_graph(14, n), n - 4, n - 1);
  }
  throw DomainError("H: unreachable");
}

Graph f_graph(int i, int n) {
  require(n >= 7 && n <= kMaxVertices, "F: need 7 <= n <= 64");
  switch (i) {
    case 1:
      return join(kbar(n - 3), plus(k(2), k(1)));
    case 2:
      return remove_edge(complete_bipartite(2, n - 2), 0, 2);
    case 3:
      return join(k(1), plus(kbar(n - 3), k(2)));
    case 5: {
      Graph g = k(n);
      for (auto [u, v] : {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}}) g = remove_edge(g, u, v);
      return g;
    }
    default:
      throw DomainError("F: only indices 1, 2, 3 and 5 are available");
  }
}

Graph k_ary_tree(int k) {
  require(k >= 2 && 1 + k + k * k <= kMaxVertices, "Tk2: need k >= 2 and 1 + k + k^2 <= 64");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.push_back({0, i});
    for (int j = 1; j <= k; ++j) edges.push_back({i, k + (i - 1) * k + j});
  }
  return from_edge_list(1 + k + k * k, edges);
}

Partition k_ary_tree_partition(int k) {
  (void)k_ary_tree(k);
  const int n = 1 + k + k * k;
  std::vector<int> part_of(static_cast<std::size_t>(n));
  part_of[0] = k;
  for (int i = 1; i <= k; ++i) {
    part_of[static_cast<std::size_t>(i)] = i - 1;
    for (int m = 1; m <= k; ++m) part_of[static_cast<std::size_t>(k + (m - 1) * k + i)] = i - 1;
  }
  return Partition::from_assignment(std::move(part_of));
}

int pendant_pair_tree_x(int k, int h, int i, int j) { return k + 2 + (i - 1) * (h - 1) + (j - 1); }

int pendant_pair_tree_y(int k, int h, int i, int j) {
  return pendant_pair_tree_x(k, h, i, j) + (h - 1) * (h - 1);
}

Graph pendant_pair_tree(int k, int h) {
  require(k >= 1 && h >= k + 2, "Tstar: need k >= 1 and h >= k + 2");
  const int n = k + 2 + 2 * (h - 1) * (h - 1);
  require(n <= kMaxVertices, "Tstar: order exceeds 64");
  std::vector<Edge> edges{{0, 1}};
  for (int i = 1; i <= k; ++i) edges.push_back({1, 1 + i});
  for (int i = 1; i < h; ++i) {
    for (int j = 1; j < h; ++j) {
      const int x = pendant_pair_tree_x(k, h, i, j);
      edges.push_back({0, x});
      edges.push_back({x, pendant_pair_tree_y(k, h, i, j)});
    }
  }
  return from_edge_list(n, edges);
}

Partition pendant_pair_tree_partition(int k, int h) {
  const Graph g = pendant_pair_tree(k, h);
  std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
  part_of[0] = h - 1;
  part_of[1] = h - 1;
  for (int i = 1; i <= k; ++i) part_of[static_cast<std::size_t>(1 + i)] = i - 1;
  for (int i = 1; i < h; ++i) {
    for (int m = 1; m < h; ++m) {
      part_of[static_cast<std::size_t>(pendant_pair_tree_x(k, h, i, m))] = i - 1;
      part_of[static_cast<std::size_t>(pendant_pair_tree_y(k, h, m, i))] = i - 1;
    }
  }
  return Partition::from_assignment(std::move(part_of));
}

namespace {

struct FamilyName {
  Family family;
  int arity;
};

const std::map<std::string, FamilyName, std::less<>>& family_names() {
  static const std::map<std::string, FamilyName, std::less<>> names{
      {"path", {Family::kPath, 1}},
      {"cycle", {Family::kCycle, 1}},
      {"complete", {Family::kComplete, 1}},
      {"empty", {Family::kEmpty, 1}},
      {"star", {Family::kStar, 1}},
      {"biclique", {Family::kBiclique, 2}},
      {"split", {Family::kCliqueSplit, 1}},
      {"cosplit", {Family::kIndependentSplit, 1}},
      {"leafclique", {Family::kCliqueLeaf, 1}},
      {"H", {Family::kH, 2}},
      {"F", {Family::kF, 2}},
      {"Tk2", {Family::kKaryTree, 1}},
      {"Tstar", {Family::kPendantPairTree, 2}},
  };
  return names;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    fields.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const auto& names = family_names();
  const auto it = names.find(fields.front());
  if (it == names.end()) throw GraphError("unknown family '" + std::string(fields.front()) + "'");
  if (static_cast<int>(fields.size()) - 1 != it->second.arity) {
    throw GraphError("family '" + it->first + "' takes " + std::to_string(it->second.arity) + " parameter(s)");
  }
  FamilySpec spec{it->second.family, {}};
  for (std::size_t i = 1; i < fields.size(); ++i) {
    int value = 0;
    const auto* end = fields[i].data() + fields[i].size();
    const auto [ptr, ec] = std::from_chars(fields[i].data(), end, value);
    if (ec != std::errc() || ptr != end || fields[i].empty()) {
      throw GraphError("bad family parameter '" + std::string(fields[i]) + "'");
    }
    spec.params.push_back(value);
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  for (const auto& [name, entry] : family_names()) {
    if (entry.family != spec.family) continue;
    std::string out = name;
    for (int p : spec.params) out += ':' + std::to_string(p);
    return out;
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto param = [&p](std::size_t i) {
    if (i >= p.size()) throw DomainError("missing family parameter");
    return p[i];
  };
  switch (spec.family) {
    case Family::kPath:
      return path_graph(param(0));
    case Family::kCycle:
      return cycle_graph(param(0));
    case Family::kComplete:
      require(param(0) >= 1 && param(0) <= kMaxVertices, "complete: need 1 <= n <= 64");
      return complete_graph(param(0));
    case Family::kEmpty:
      require(param(0) >= 1 && param(0) <= kMaxVertices, "empty: need 1 <= n <= 64");
      return empty_graph(param(0));
    case Family::kStar:
      return star_graph(param(0));
    case Family::kBiclique:
      return complete_bipartite(param(0), param(1));
    case Family::kCliqueSplit:
      return clique_split_graph(param(0));
    case Family::kIndependentSplit:
      return independent_split_graph(param(0));
    case Family::kCliqueLeaf:
      return clique_with_leaf(param(0));
    case Family::kH:
      return h_graph(param(0), param(1));
    case Family::kF:
      return f_graph(param(0), param(1));
    case Family::kKaryTree:
      return k_ary_tree(param(0));
    case Family::kPendantPairTree:
      return pendant_pair_tree(param(0), param(1));
  }
  throw DomainError("unknown family");
}

}  // namespace pdim
