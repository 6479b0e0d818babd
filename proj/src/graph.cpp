#include "pdim/graph.hpp"

#include <algorithm>
#include <string>

namespace pdim {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " outside [1, 64]");
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  }
}

}  // namespace

VertexMask mask_of(std::initializer_list<int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

std::vector<int> members(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

Graph::Graph() : n_(1), adj_(1, 0) {}

Graph Graph::from_adjacency(int n, std::vector<VertexMask> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) {
    throw GraphError("adjacency has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  }
  const VertexMask all = all_vertices(n);
  for (int i = 0; i < n; ++i) {
    const VertexMask row = rows[static_cast<std::size_t>(i)];
    if ((row & ~all) != 0) throw GraphError("adjacency row " + std::to_string(i) + " out of range");
    if ((row >> i) & 1U) throw GraphError("self-loop at vertex " + std::to_string(i));
    for (VertexMask m = row; m != 0; m &= m - 1) {
      const int j = lowest(m);
      if (!((rows[static_cast<std::size_t>(j)] >> i) & 1U)) {
        throw GraphError("asymmetric adjacency between " + std::to_string(i) + " and " +
                         std::to_string(j));
      }
    }
  }
  return Graph(n, std::move(rows));
}

int Graph::degree(int v) const { return popcount(neighbors(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : adj_) twice += popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (VertexMask m = neighbors(i) & ~all_vertices(i + 1); m != 0; m &= m - 1) {
      out.emplace_back(i, lowest(m));
    }
  }
  return out;
}

Graph from_edge_list(int n, const std::vector<Edge>& edges) {
  check_order(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph::from_adjacency(n, std::move(rows));
}

Graph empty_graph(int n) { return from_edge_list(n, {}); }

Graph complete_graph(int n) { return complement(empty_graph(n)); }

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = ~g.neighbors(i) & all_vertices(n) & ~bit(i);
  }
  return Graph::from_adjacency(n, std::move(rows));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxVertices) throw GraphError("union order " + std::to_string(n) + " exceeds 64");
  std::vector<VertexMask> rows(g1.rows());
  for (VertexMask row : g2.rows()) rows.push_back(row << n1);
  return Graph::from_adjacency(n, std::move(rows));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxVertices) throw GraphError("join order " + std::to_string(n) + " exceeds 64");
  const VertexMask left = all_vertices(n1);
  const VertexMask right = all_vertices(n) & ~left;
  std::vector<VertexMask> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (VertexMask row : g1.rows()) rows.push_back(row | right);
  for (VertexMask row : g2.rows()) rows.push_back((row << n1) | left);
  return Graph::from_adjacency(n, std::move(rows));
}

Graph induced(const Graph& g, VertexMask w) {
  if ((w & ~g.vertices()) != 0) throw GraphError("induced: vertex set out of range");
  const std::vector<int> keep = members(w);
  const int m = static_cast<int>(keep.size());
  check_order(m);
  std::vector<VertexMask> rows(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (g.has_edge(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)])) {
        rows[static_cast<std::size_t>(a)] |= bit(b);
      }
    }
  }
  return Graph::from_adjacency(m, std::move(rows));
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g.order(), u);
  check_vertex(g.order(), v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  std::vector<VertexMask> rows(g.rows());
  rows[static_cast<std::size_t>(u)] |= bit(v);
  rows[static_cast<std::size_t>(v)] |= bit(u);
  return Graph::from_adjacency(g.order(), std::move(rows));
}

Graph remove_edge(const Graph& g, int u, int v) {
  check_vertex(g.order(), u);
  check_vertex(g.order(), v);
  if (!g.has_edge(u, v)) {
    throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
  }
  std::vector<VertexMask> rows(g.rows());
  rows[static_cast<std::size_t>(u)] &= ~bit(v);
  rows[static_cast<std::size_t>(v)] &= ~bit(u);
  return Graph::from_adjacency(g.order(), std::move(rows));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("relabel: permutation size mismatch");
  VertexMask seen = 0;
  for (int p : perm) {
    check_vertex(n, p);
    seen |= bit(p);
  }
  if (seen != g.vertices()) throw GraphError("relabel: not a permutation");
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    const int a = perm[static_cast<std::size_t>(u)];
    const int b = perm[static_cast<std::size_t>(v)];
    rows[static_cast<std::size_t>(a)] |= bit(b);
    rows[static_cast<std::size_t>(b)] |= bit(a);
  }
  return Graph::from_adjacency(n, std::move(rows));
}

bool is_connected(const Graph& g) {
  VertexMask seen = bit(0);
  VertexMask frontier = bit(0);
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) next |= g.neighbors(lowest(m));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

int degree(const Graph& g, int v) {
  check_vertex(g.order(), v);
  return g.degree(v);
}

int diameter(const Graph& g) {
  const DistanceMatrix dm(g);
  if (!dm.connected()) throw DomainError("diameter of a disconnected graph");
  int best = 0;
  for (int u = 0; u < g.order(); ++u) best = std::max(best, dm.eccentricity(u));
  return best;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()),
      d_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kUnreachable),
      layers_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
  for (int u = 0; u < n_; ++u) {
    VertexMask seen = bit(u);
    VertexMask frontier = bit(u);
    int r = 0;
    while (frontier != 0) {
      layers_[static_cast<std::size_t>(u * n_ + r)] = frontier;
      for (VertexMask m = frontier; m != 0; m &= m - 1) {
        d_[static_cast<std::size_t>(u * n_ + lowest(m))] = static_cast<std::int8_t>(r);
      }
      VertexMask next = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) next |= g.neighbors(lowest(m));
      frontier = next & ~seen;
      seen |= frontier;
      ++r;
    }
    if (seen != g.vertices()) connected_ = false;
  }
}

std::optional<int> DistanceMatrix::get(int u, int v) const {
  const auto d = raw(u, v);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

int DistanceMatrix::at(int u, int v) const {
  const auto d = raw(u, v);
  if (d == kUnreachable) {
    throw DomainError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                      " are not connected");
  }
  return d;
}

VertexMask DistanceMatrix::layer(int u, int r) const {
  if (r < 0 || r >= n_) return 0;
  return layers_[static_cast<std::size_t>(u * n_ + r)];
}

VertexMask DistanceMatrix::ball(int u, int r) const {
  VertexMask out = 0;
  for (int i = 0; i <= r && i < n_; ++i) out |= layer(u, i);
  return out;
}

int DistanceMatrix::eccentricity(int u) const {
  if (!connected_) throw DomainError("eccentricity in a disconnected graph");
  int r = 0;
  while (r + 1 < n_ && layer(u, r + 1) != 0) ++r;
  return r;
}

int DistanceMatrix::to_set(int u, VertexMask s) const {
  for (int r = 0; r < n_; ++r) {
    if ((layer(u, r) & s) != 0) return r;
  }
  throw DomainError("distance to an empty or unreachable vertex set");
}

DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

}  // namespace pdim
