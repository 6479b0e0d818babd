#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdim {

/// One bit per vertex; vertex i is bit i.
using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int kMaxVertices = 64;

/// Thrown for malformed input graphs, out-of-range vertices, or size limits.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's mathematical precondition does not hold
/// (disconnected graph, wrong twin regime, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
constexpr VertexMask all_vertices(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr int lowest(VertexMask m) { return std::countr_zero(m); }

VertexMask mask_of(std::initializer_list<int> vertices);
VertexMask mask_of(const std::vector<int>& vertices);
std::vector<int> members(VertexMask m);

/// Immutable simple undirected graph on vertices 0..n-1, n in [1, 64].
class Graph {
 public:
  /// K_1.
  Graph();

  /// Validates symmetry, absence of loops and range of every row.
  static Graph from_adjacency(int n, std::vector<VertexMask> rows);

  int order() const { return n_; }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<Edge> edges() const;
  VertexMask vertices() const { return all_vertices(n_); }
  const std::vector<VertexMask>& rows() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<VertexMask> rows) : n_(n), adj_(std::move(rows)) {}

  int n_ = 1;
  std::vector<VertexMask> adj_;
};

Graph from_edge_list(int n, const std::vector<Edge>& edges);
Graph empty_graph(int n);
Graph complete_graph(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
/// Vertex i of the result is the i-th smallest member of w.
Graph induced(const Graph& g, VertexMask w);
Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);
int degree(const Graph& g, int v);
int diameter(const Graph& g);

/// All-pairs hop distances. Unreachable pairs carry kUnreachable and
/// reading them through at() throws.
class DistanceMatrix {
 public:
  static constexpr std::int8_t kUnreachable = -1;

  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  bool reachable(int u, int v) const { return raw(u, v) != kUnreachable; }
  std::optional<int> get(int u, int v) const;
  int at(int u, int v) const;
  /// Vertices at exactly distance r from u (empty beyond the eccentricity).
  VertexMask layer(int u, int r) const;
  /// Vertices at distance at most r from u.
  VertexMask ball(int u, int r) const;
  int eccentricity(int u) const;
  bool connected() const { return connected_; }
  /// d(u, S) = min over s in S of d(u, s); S must be non-empty and reachable.
  int to_set(int u, VertexMask s) const;

 private:
  std::int8_t raw(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }

  int n_;
  bool connected_ = true;
  std::vector<std::int8_t> d_;
  // layers_[u * n + r]
  std::vector<VertexMask> layers_;
};

DistanceMatrix distances(const Graph& g);

}  // namespace pdim
