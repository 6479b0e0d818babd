#include "pdim/iso.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "pdim/graph_io.hpp"
#include "pdim/twins.hpp"

namespace pdim {

namespace {

/// Ordered partition of the vertex set, one mask per cell.
struct Cells {
  int count = 0;
  std::array<VertexMask, kMaxVertices> cell{};
};

Cells unit_partition(int n) {
  Cells p;
  p.count = 1;
  p.cell[0] = all_vertices(n);
  return p;
}

/// p with vertex v split off in front of its cell t.
Cells individualize(const Cells& p, int t, int v) {
  Cells q;
  q.count = p.count + 1;
  for (int i = 0; i < t; ++i) q.cell[static_cast<std::size_t>(i)] = p.cell[static_cast<std::size_t>(i)];
  q.cell[static_cast<std::size_t>(t)] = bit(v);
  q.cell[static_cast<std::size_t>(t + 1)] = p.cell[static_cast<std::size_t>(t)] & ~bit(v);
  for (int i = t + 1; i < p.count; ++i) q.cell[static_cast<std::size_t>(i + 1)] = p.cell[static_cast<std::size_t>(i)];
  return q;
}

/// Splits cells by neighbour count into each cell in turn until equitable.
/// Subcells are ordered by increasing count. The optional trace records
/// every split so that two refinements can be compared step by step.
void refine(const VertexMask* adj, Cells& p, std::vector<int>* trace) {
  std::array<int, kMaxVertices> counts{};
  Cells next;
  bool split = true;
  while (split) {
    split = false;
    for (int s = 0; s < p.count; ++s) {
      const VertexMask w = p.cell[static_cast<std::size_t>(s)];
      next.count = 0;
      for (int c = 0; c < p.count; ++c) {
        const VertexMask cell = p.cell[static_cast<std::size_t>(c)];
        if ((cell & (cell - 1)) == 0) {
          next.cell[static_cast<std::size_t>(next.count++)] = cell;
          continue;
        }
        int lo = kMaxVertices + 1;
        int hi = -1;
        for (VertexMask m = cell; m; m &= m - 1) {
          const int v = lowest(m);
          const int k = popcount(adj[v] & w);
          counts[static_cast<std::size_t>(v)] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) {
          next.cell[static_cast<std::size_t>(next.count++)] = cell;
          continue;
        }
        split = true;
        VertexMask rest = cell;
        while (rest) {
          int least = kMaxVertices + 1;
          for (VertexMask m = rest; m; m &= m - 1) least = std::min(least, counts[static_cast<std::size_t>(lowest(m))]);
          VertexMask part = 0;
          for (VertexMask m = rest; m; m &= m - 1) {
            const int v = lowest(m);
            if (counts[static_cast<std::size_t>(v)] == least) part |= bit(v);
          }
          rest &= ~part;
          next.cell[static_cast<std::size_t>(next.count++)] = part;
          if (trace != nullptr) {
            trace->push_back(s);
            trace->push_back(c);
            trace->push_back(least);
            trace->push_back(popcount(part));
          }
        }
      }
      std::swap(p, next);
    }
  }
}

int first_nonsingleton(const Cells& p) {
  for (int i = 0; i < p.count; ++i) {
    const VertexMask c = p.cell[static_cast<std::size_t>(i)];
    if (c & (c - 1)) return i;
  }
  return -1;
}

/// twin_rep[v] is the least vertex twin to v (v itself when none).
void twin_representatives(int n, const VertexMask* adj, std::array<int, kMaxVertices>& rep) {
  for (int v = 0; v < n; ++v) {
    rep[static_cast<std::size_t>(v)] = v;
    for (int u = 0; u < v; ++u) {
      const VertexMask both = bit(u) | bit(v);
      if (((adj[u] ^ adj[v]) & ~both) == 0) {
        rep[static_cast<std::size_t>(v)] = rep[static_cast<std::size_t>(u)];
        break;
      }
    }
  }
}

class Canonizer {
 public:
  Canonizer(int n, const VertexMask* adj) : n_(n), adj_(adj) { twin_representatives(n, adj, rep_); }

  CanonicalCode run(std::array<int, kMaxVertices>* labelling) {
    search(unit_partition(n_));
    if (labelling != nullptr) *labelling = best_lab_;
    return {n_, best_};
  }

 private:
  // Twins in one cell are swapped by an automorphism fixing the partition,
  // so only one per twin class needs a branch.
  void search(Cells p) {
    refine(adj_, p, nullptr);
    const int t = first_nonsingleton(p);
    if (t < 0) {
      leaf(p);
      return;
    }
    VertexMask tried = 0;
    for (VertexMask m = p.cell[static_cast<std::size_t>(t)]; m; m &= m - 1) {
      const int v = lowest(m);
      const int r = rep_[static_cast<std::size_t>(v)];
      if (tried & bit(r)) continue;
      tried |= bit(r);
      search(individualize(p, t, v));
    }
  }

  void leaf(const Cells& p) {
    std::array<int, kMaxVertices> lab{};
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(i)] = lowest(p.cell[static_cast<std::size_t>(i)]);
    unsigned __int128 code = 0;
    for (int j = 1; j < n_; ++j) {
      const VertexMask row = adj_[lab[static_cast<std::size_t>(j)]];
      for (int i = 0; i < j; ++i) code = (code << 1) | static_cast<unsigned>((row >> lab[static_cast<std::size_t>(i)]) & 1U);
    }
    if (!have_ || code < best_) {
      have_ = true;
      best_ = code;
      best_lab_ = lab;
    }
  }

  int n_;
  const VertexMask* adj_;
  std::array<int, kMaxVertices> rep_{};
  bool have_ = false;
  unsigned __int128 best_ = 0;
  std::array<int, kMaxVertices> best_lab_{};
};

CanonicalCode canonical_code_rows(int n, const VertexMask* adj) {
  if (n > kMaxCanonicalOrder) throw DomainError("canonical form refused for n > 16");
  return Canonizer(n, adj).run(nullptr);
}

}  // namespace

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  const auto lo = static_cast<std::uint64_t>(c.bits);
  const auto hi = static_cast<std::uint64_t>(c.bits >> 64);
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
  h ^= (hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)) * 0xC2B2AE3D27D4EB4FULL;
  h ^= static_cast<std::uint64_t>(c.order);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

CanonicalCode canonical_code(const Graph& g) { return canonical_code_rows(g.order(), g.rows().data()); }

Graph graph_of(const CanonicalCode& code) {
  const int n = code.order;
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  int shift = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --shift;
      if ((code.bits >> shift) & 1U) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  return Graph::from_adjacency(n, rows);
}

Graph canonical_graph(const Graph& g) { return graph_of(canonical_code(g)); }

CanonicalForm canonical_form(const Graph& g) { return {write_graph6(canonical_graph(g))}; }

Fingerprint fingerprint(const Graph& g) {
  const int n = g.order();
  Fingerprint f;
  f.order = n;
  f.edges = g.edge_count();
  for (int v = 0; v < n; ++v) f.degrees.push_back(g.degree(v));
  std::sort(f.degrees.begin(), f.degrees.end());
  const DistanceMatrix dm(g);
  f.distance_counts.assign(static_cast<std::size_t>(n + 1), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const auto d = dm.get(u, v);
      ++f.distance_counts[static_cast<std::size_t>(d ? *d : n)];
    }
  }
  const TwinDecomposition td = twin_decomposition(g);
  for (std::size_t i = 0; i < td.classes.size(); ++i) {
    f.twin_profile.emplace_back(popcount(td.classes[i]), static_cast<int>(td.kinds[i]));
  }
  std::sort(f.twin_profile.begin(), f.twin_profile.end());
  return f;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {
    twin_representatives(n_, g2.rows().data(), rep2_);
  }

  bool run() { return search(unit_partition(n_), unit_partition(n_)); }

 private:
  bool search(Cells p1, Cells p2) {
    trace1_.clear();
    trace2_.clear();
    refine(g1_.rows().data(), p1, &trace1_);
    refine(g2_.rows().data(), p2, &trace2_);
    if (trace1_ != trace2_ || p1.count != p2.count) return false;
    const int t = first_nonsingleton(p1);
    if (t < 0) return verify(p1, p2);
    const int v = lowest(p1.cell[static_cast<std::size_t>(t)]);
    VertexMask tried = 0;
    for (VertexMask m = p2.cell[static_cast<std::size_t>(t)]; m; m &= m - 1) {
      const int w = lowest(m);
      const int r = rep2_[static_cast<std::size_t>(w)];
      if (tried & bit(r)) continue;
      tried |= bit(r);
      if (search(individualize(p1, t, v), individualize(p2, t, w))) return true;
    }
    return false;
  }

  bool verify(const Cells& p1, const Cells& p2) const {
    std::array<int, kMaxVertices> map{};
    for (int i = 0; i < n_; ++i) {
      map[static_cast<std::size_t>(lowest(p1.cell[static_cast<std::size_t>(i)]))] =
          lowest(p2.cell[static_cast<std::size_t>(i)]);
    }
    for (int u = 0; u < n_; ++u) {
      VertexMask image = 0;
      for (VertexMask m = g1_.neighbors(u); m; m &= m - 1) image |= bit(map[static_cast<std::size_t>(lowest(m))]);
      if (image != g2_.neighbors(map[static_cast<std::size_t>(u)])) return false;
    }
    return true;
  }

  const Graph& g1_;
  const Graph& g2_;
  int n_;
  std::array<int, kMaxVertices> rep2_{};
  std::vector<int> trace1_;
  std::vector<int> trace2_;
};

bool connected_rows(int n, const VertexMask* adj) {
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= adj[lowest(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices(n);
}

std::vector<Graph> graphs_from_codes(std::unordered_set<CanonicalCode, CanonicalCodeHash>& found) {
  std::vector<CanonicalCode> codes(found.begin(), found.end());
  found.clear();
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const CanonicalCode& c : codes) out.push_back(graph_of(c));
  return out;
}

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  if (fingerprint(g1) != fingerprint(g2)) return false;
  return IsoSearch(g1, g2).run();
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7) throw DomainError("enumerate_connected: need 1 <= n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::unordered_set<CanonicalCode, CanonicalCodeHash> found;
  std::array<VertexMask, kMaxVertices> adj{};
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (std::popcount(s) < n - 1) continue;
    std::fill(adj.begin(), adj.begin() + n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((s >> e) & 1U) {
        adj[static_cast<std::size_t>(pairs[e].first)] |= bit(pairs[e].second);
        adj[static_cast<std::size_t>(pairs[e].second)] |= bit(pairs[e].first);
      }
    }
    if (!connected_rows(n, adj.data())) continue;
    found.insert(canonical_code_rows(n, adj.data()));
  }
  return graphs_from_codes(found);
}

std::vector<Graph> generate_connected(int n) {
  if (n < 1 || n > 9) throw DomainError("generate_connected: need 1 <= n <= 9");
  if (n == 1) return {Graph()};
  const std::vector<Graph> parents = generate_connected(n - 1);
  std::unordered_set<CanonicalCode, CanonicalCodeHash> found;
  std::array<VertexMask, kMaxVertices> adj{};
  const int last = n - 1;
  for (const Graph& parent : parents) {
    for (VertexMask s = 1; s <= all_vertices(last); ++s) {
      for (int v = 0; v < last; ++v) {
        adj[static_cast<std::size_t>(v)] = parent.neighbors(v) | (((s >> v) & 1U) ? bit(last) : 0);
      }
      adj[static_cast<std::size_t>(last)] = s;
      found.insert(canonical_code_rows(n, adj.data()));
    }
  }
  return graphs_from_codes(found);
}

std::optional<Graph> CatalogReader::next() {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    if (buffer_.empty()) continue;
    try {
      Graph g = parse_graph6(buffer_);
      ++count_;
      ++orders_[g.order()];
      return g;
    } catch (const GraphError& e) {
      throw CatalogError(e.what(), line_);
    }
  }
  return std::nullopt;
}

void for_each_in_catalog(std::istream& in, const std::function<void(const Graph&)>& visit) {
  CatalogReader reader(in);
  while (auto g = reader.next()) visit(*g);
}

}  // namespace pdim
