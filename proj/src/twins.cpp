#include "pdim/twins.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pdim {

std::string_view to_string(TwinKind kind) {
  switch (kind) {
    case TwinKind::kSingleton:
      return "singleton";
    case TwinKind::kTrue:
      return "true";
    case TwinKind::kFalse:
      return "false";
  }
  return "?";
}

VertexMask TwinDecomposition::unique_tau_set() const {
  if (tau_sets.size() != 1) {
    throw DomainError("tau-set is not unique (" + std::to_string(tau_sets.size()) +
                      " classes of size " + std::to_string(twin_number) + ")");
  }
  return first_tau_set();
}

bool are_twins(const Graph& g, int u, int v) {
  if (u == v) throw DomainError("are_twins: u == v");
  const VertexMask both = bit(u) | bit(v);
  return (g.neighbors(u) & ~both) == (g.neighbors(v) & ~both);
}

TwinDecomposition twin_decomposition(const Graph& g) {
  const int n = g.order();
  TwinDecomposition td;
  td.class_of.assign(static_cast<std::size_t>(n), -1);
  // Twins share either the open neighbourhood (false twins) or the closed
  // one (true twins); the two relations cannot both be non-trivial at one
  // vertex, so grouping by each key and merging gives the classes.
  std::map<VertexMask, VertexMask> by_open;
  std::map<VertexMask, VertexMask> by_closed;
  for (int v = 0; v < n; ++v) {
    by_open[g.neighbors(v)] |= bit(v);
    by_closed[g.neighbors(v) | bit(v)] |= bit(v);
  }
  for (int v = 0; v < n; ++v) {
    if (td.class_of[static_cast<std::size_t>(v)] >= 0) continue;
    const VertexMask open = by_open[g.neighbors(v)];
    const VertexMask closed = by_closed[g.neighbors(v) | bit(v)];
    VertexMask cls = bit(v);
    TwinKind kind = TwinKind::kSingleton;
    if (popcount(open) > 1) {
      cls = open;
      kind = TwinKind::kFalse;
    } else if (popcount(closed) > 1) {
      cls = closed;
      kind = TwinKind::kTrue;
    }
    const int index = static_cast<int>(td.classes.size());
    td.classes.push_back(cls);
    td.kinds.push_back(kind);
    for (int m : members(cls)) td.class_of[static_cast<std::size_t>(m)] = index;
  }
  td.twin_number = 0;
  for (VertexMask c : td.classes) td.twin_number = std::max(td.twin_number, popcount(c));
  for (std::size_t i = 0; i < td.classes.size(); ++i) {
    if (popcount(td.classes[i]) == td.twin_number) td.tau_sets.push_back(static_cast<int>(i));
  }
  return td;
}

VertexMask outer_neighborhood(const Graph& g, VertexMask w) {
  VertexMask out = 0;
  for (int v : members(w)) out |= g.neighbors(v);
  return out & ~w;
}

VertexMask distinguishing_vertices(const Graph& g, VertexMask w) {
  if (w == 0 || (w & ~g.vertices()) != 0) throw DomainError("distinguishing_vertices: bad W");
  const DistanceMatrix dm(g);
  if (!dm.connected()) throw DomainError("distinguishing_vertices: graph is disconnected");
  const TwinDecomposition td = twin_decomposition(g);
  const int w0 = lowest(w);
  if (popcount(w) != td.twin_number || td.class_mask_of(w0) != w) {
    throw DomainError("distinguishing_vertices: W is not a tau-set");
  }
  for (int v : members(w)) {
    if (((g.neighbors(v) | bit(v)) & w) != w) {
      throw DomainError("distinguishing_vertices: W does not induce a clique");
    }
  }
  const VertexMask outer = outer_neighborhood(g, w);
  VertexMask result = 0;
  for (int v : members(g.vertices() & ~w)) {
    const int to_w = dm.to_set(v, w);
    bool distinguishing = true;
    for (int z : members(outer)) {
      if (dm.at(v, z) == to_w) {
        distinguishing = false;
        break;
      }
    }
    if (distinguishing) result |= bit(v);
  }
  return result;
}

}  // namespace pdim
