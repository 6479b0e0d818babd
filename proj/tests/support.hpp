#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pdim/graph.hpp"
#include "pdim/iso.hpp"

namespace pdim::testing {

using Rng = std::mt19937_64;

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// G(n, p); may be disconnected.
inline Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return from_edge_list(n, edges);
}

/// Random spanning tree plus G(n, p) edges, randomly relabelled.
inline Graph random_connected(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return relabel(from_edge_list(n, edges), random_permutation(n, rng));
}

/// Edge density drawn per graph so sparse and dense graphs both show up.
inline Graph random_connected(int n, Rng& rng) {
  std::uniform_real_distribution<double> density(0.0, 0.9);
  return random_connected(n, density(rng), rng);
}

/// Floyd-Warshall on the edge list; -1 for unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= kInf) x = -1;
  return d;
}

/// Every connected graph up to isomorphism with 1 <= n <= max_n (<= 7).
inline const std::vector<Graph>& small_corpus(int max_n = 7) {
  static const std::vector<std::vector<Graph>> by_order = [] {
    std::vector<std::vector<Graph>> out(8);
    for (int n = 1; n <= 7; ++n) out[static_cast<std::size_t>(n)] = enumerate_connected(n);
    return out;
  }();
  static std::vector<std::vector<Graph>> prefix(8);
  auto& cached = prefix[static_cast<std::size_t>(max_n)];
  if (cached.empty())
    for (int n = 1; n <= max_n; ++n)
      cached.insert(cached.end(), by_order[static_cast<std::size_t>(n)].begin(),
                    by_order[static_cast<std::size_t>(n)].end());
  return cached;
}

}  // namespace pdim::testing
