#include "pdim/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace pdim {

namespace {

constexpr int kMaxGraph6Order = 62;

int decode_byte(std::string_view s, std::size_t pos) {
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw Graph6Error("byte out of range 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 record", 0);

  std::size_t pos = 0;
  int n = decode_byte(line, pos++);
  if (n == 63) {
    // 126 prefix: order in the next three bytes (big-endian 18 bits).
    if (line.size() < 4) throw Graph6Error("truncated order field", line.size());
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(line, pos++);
    if (n > kMaxVertices) throw Graph6Error("order exceeds 64", 1);
  }
  if (n < 1) throw Graph6Error("graph of order 0", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < pos + body) throw Graph6Error("record too short", line.size());
  if (line.size() > pos + body) throw Graph6Error("trailing bytes", pos + body);

  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_byte(line, pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  // Padding bits in the final byte must be zero.
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((decode_byte(line, last) & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("non-zero padding bits", last);
    }
  }
  return Graph::from_adjacency(n, std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw GraphError("graph6 writer supports order <= 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) throw GraphError("edge list line " + std::to_string(lineno) + ": bad order");
      continue;
    }
    int u = 0;
    int v = 0;
    if (!(fields >> u >> v)) {
      throw GraphError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw GraphError("edge list: missing order line");
  return from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace pdim
