#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "pdim/resolve.hpp"

namespace pdim {

std::string_view to_string(BoundReason reason) {
  switch (reason) {
    case BoundReason::kTrivial:
      return "trivial";
    case BoundReason::kTwinNumber:
      return "twin-number";
    case BoundReason::kCliqueTwinSet:
      return "clique-twin-set";
    case BoundReason::kComplete:
      return "complete";
    case BoundReason::kPendantPairs:
      return "pendant-pairs";
    case BoundReason::kSingletons:
      return "singletons";
    case BoundReason::kDiameter:
      return "diameter";
    case BoundReason::kDegreePairing:
      return "degree-pairing";
    case BoundReason::kHalfComplement:
      return "half-complement";
    case BoundReason::kFalseTwinExact:
      return "false-twin";
    case BoundReason::kDistinguishing:
      return "distinguishing";
    case BoundReason::kMetricDimension:
      return "metric-dimension";
  }
  return "?";
}

namespace {

bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

bool induces_clique(const Graph& g, VertexMask w) {
  for (int v : members(w)) {
    if (((g.neighbors(v) | bit(v)) & w) != w) return false;
  }
  return true;
}

bool induces_empty(const Graph& g, VertexMask w) {
  for (int v : members(w)) {
    if ((g.neighbors(v) & w) != 0) return false;
  }
  return true;
}

/// W must be the unique tau-set of a connected g with tau > n/2.
void require_large_tau_set(const Graph& g, VertexMask w, const char* who) {
  if (!is_connected(g)) throw DomainError(std::string(who) + ": graph is disconnected");
  const TwinDecomposition td = twin_decomposition(g);
  if (2 * td.twin_number <= g.order()) throw DomainError(std::string(who) + ": requires tau > n/2");
  if (w != td.unique_tau_set()) throw DomainError(std::string(who) + ": W is not the tau-set");
}

Partition checked(const Graph& g, Partition pi, const char* who) {
  if (!is_locating_partition(DistanceMatrix(g), pi)) {
    throw std::logic_error(std::string(who) + " produced a non-locating partition");
  }
  return pi;
}

}  // namespace

Partition construct_diametral(const Graph& g) {
  const DistanceMatrix dm(g);
  if (!dm.connected()) throw DomainError("construct_diametral: graph is disconnected");
  const int n = g.order();
  int peripheral = 0;
  for (int u = 1; u < n; ++u) {
    if (dm.eccentricity(u) > dm.eccentricity(peripheral)) peripheral = u;
  }
  const int diam = dm.eccentricity(peripheral);
  // One vertex per distance layer 1..diam; {peripheral} tells them apart.
  VertexMask path = 0;
  for (int r = 1; r <= diam; ++r) path |= bit(lowest(dm.layer(peripheral, r)));
  std::vector<VertexMask> parts;
  if (path != 0) parts.push_back(path);
  for (int v : members(g.vertices() & ~path)) parts.push_back(bit(v));
  return Partition::from_parts(n, parts);
}

Partition construct_degree_pairing(const Graph& g, int u) {
  if (!is_connected(g)) throw DomainError("construct_degree_pairing: graph is disconnected");
  const int n = g.order();
  if (n < 2) throw DomainError("construct_degree_pairing: requires n >= 2");
  if (u < 0 || u >= n) throw GraphError("construct_degree_pairing: vertex out of range");
  const std::vector<int> near = members(g.neighbors(u));
  const std::vector<int> far = members(g.vertices() & ~g.neighbors(u) & ~bit(u));
  const std::size_t m = std::min(near.size(), far.size());
  std::vector<VertexMask> parts;
  VertexMask used = 0;
  for (std::size_t i = 0; i < m; ++i) {
    parts.push_back(bit(near[i]) | bit(far[i]));
    used |= parts.back();
  }
  for (int v : members(g.vertices() & ~used)) parts.push_back(bit(v));
  return Partition::from_parts(n, parts);
}

Partition construct_false_twin(const Graph& g, VertexMask w) {
  require_large_tau_set(g, w, "construct_false_twin");
  if (!induces_empty(g, w)) throw DomainError("construct_false_twin: W is not independent");
  const std::vector<int> ws = members(w);
  // Neighbours of W first, then the rest of V\W, each in index order.
  const VertexMask outer = outer_neighborhood(g, w);
  std::vector<int> vs = members(outer);
  for (int v : members(g.vertices() & ~w & ~outer)) vs.push_back(v);
  std::vector<VertexMask> parts;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    VertexMask part = bit(ws[i]);
    if (i < vs.size()) part |= bit(vs[i]);
    parts.push_back(part);
  }
  return Partition::from_parts(g.order(), parts);
}

Partition construct_kmedios(const Graph& g, VertexMask w) {
  require_large_tau_set(g, w, "construct_kmedios");
  if (!induces_clique(g, w)) throw DomainError("construct_kmedios: W is not a clique");
  if (is_complete(g)) throw DomainError("construct_kmedios: graph is complete");

  const VertexMask w1 = outer_neighborhood(g, w);
  const VertexMask w2 = g.vertices() & ~w & ~w1;
  const int r = popcount(w1);

  VertexMask u1 = 0;
  for (int x : members(w1)) {
    if (popcount(g.neighbors(x) & w1) == r - 1) u1 |= bit(x);
  }
  const VertexMask u2 = w1 & ~u1;

  // Each vertex universal inside G[W1] has a neighbour beyond N[W], else it
  // would be a twin of W; take the least one.
  VertexMask a2 = 0;
  for (int x : members(u1)) {
    const VertexMask far = g.neighbors(x) & w2;
    if (far == 0) throw std::logic_error("construct_kmedios: universal W1 vertex without W2 neighbour");
    a2 |= bit(lowest(far));
  }

  // Greedy maximal independent set of the complement of G[U2]; it and its
  // complement in U2 both dominate there, keep the smaller.
  VertexMask independent = 0;
  VertexMask blocked = 0;
  for (int x : members(u2)) {
    if ((blocked >> x) & 1U) continue;
    independent |= bit(x);
    blocked |= bit(x) | (~g.neighbors(x) & u2);
  }
  const VertexMask rest = u2 & ~independent;
  const VertexMask a1 = popcount(rest) < popcount(independent) ? rest : independent;

  const std::vector<int> ws = members(w);
  const std::vector<int> outside = members((w1 | w2) & ~(a1 | a2));
  std::vector<VertexMask> parts;
  for (int x : members(a1 | a2)) parts.push_back(bit(x));
  for (std::size_t i = 0; i < ws.size(); ++i) {
    VertexMask part = bit(ws[i]);
    if (i < outside.size()) part |= bit(outside[i]);
    parts.push_back(part);
  }
  return Partition::from_parts(g.order(), parts);
}

Partition construct_distinguishing(const Graph& g, VertexMask w, int v) {
  require_large_tau_set(g, w, "construct_distinguishing");
  if (v < 0 || v >= g.order() || !((distinguishing_vertices(g, w) >> v) & 1U)) {
    throw DomainError("construct_distinguishing: v is not W-distinguishing");
  }
  const std::vector<int> ws = members(w);
  const std::vector<int> zs = members(g.vertices() & ~w & ~bit(v));
  std::vector<VertexMask> parts;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    VertexMask part = bit(ws[i]);
    if (i < zs.size()) part |= bit(zs[i]);
    parts.push_back(part);
  }
  parts.push_back(bit(v));
  return Partition::from_parts(g.order(), parts);
}

Partition construct_from_locating_set(const Graph& g, VertexMask s) {
  std::vector<VertexMask> parts;
  for (int x : members(s)) parts.push_back(bit(x));
  const VertexMask rest = g.vertices() & ~s;
  if (rest != 0) parts.push_back(rest);
  return Partition::from_parts(g.order(), parts);
}

int pendant_pair_bound(const Graph& g) {
  // x with exactly one leaf neighbour y(x), grouped by A = N(x)\{y(x)}.
  // r(x|pi) depends only on the part p of x and on which parts other than p
  // meet A or contain y(x). Some part c meets A, and y(x) in c or in p give
  // the same vector, so t parts separate at most t + (t-1)^2 group members.
  std::map<VertexMask, int> groups;
  for (int x = 0; x < g.order(); ++x) {
    VertexMask leaves = 0;
    for (int y : members(g.neighbors(x))) {
      if (g.degree(y) == 1) leaves |= bit(y);
    }
    if (popcount(leaves) != 1 || g.degree(x) < 2) continue;
    ++groups[g.neighbors(x) & ~leaves];
  }
  int best = 0;
  for (const auto& [attachment, count] : groups) best = std::max(best, count);
  int t = 1;
  while (t * t - t + 1 < best) ++t;
  return t;
}

LowerBound bp_lower_bounds(const Graph& g, const TwinDecomposition& td) {
  const int n = g.order();
  LowerBound best{1, BoundReason::kTrivial};
  auto offer = [&best](int value, BoundReason reason) {
    if (value > best.value) best = {value, reason};
  };
  if (n >= 2) offer(2, BoundReason::kTrivial);
  if (is_complete(g)) {
    offer(n, BoundReason::kComplete);
    return best;
  }
  offer(td.twin_number, BoundReason::kTwinNumber);
  for (int index : td.tau_sets) {
    if (td.twin_number >= 2 && induces_clique(g, td.classes[static_cast<std::size_t>(index)])) {
      offer(td.twin_number + 1, BoundReason::kCliqueTwinSet);
    }
  }
  offer(pendant_pair_bound(g), BoundReason::kPendantPairs);
  return best;
}

UpperBound bp_upper_bounds(const Graph& g, const TwinDecomposition& td, const BoundOptions& options) {
  const int n = g.order();
  if (!is_connected(g)) throw DomainError("bp_upper_bounds: graph is disconnected");
  UpperBound best{n, BoundReason::kSingletons, Partition::singletons(n)};
  auto offer = [&](Partition pi, BoundReason reason) {
    if (pi.size() < best.value) best = {pi.size(), reason, checked(g, std::move(pi), "upper bound")};
  };
  if (n == 1) return best;

  offer(construct_diametral(g), BoundReason::kDiameter);

  int pivot = 0;
  int pairs = -1;
  for (int u = 0; u < n; ++u) {
    const int m = std::min(g.degree(u), n - 1 - g.degree(u));
    if (m > pairs) {
      pairs = m;
      pivot = u;
    }
  }
  offer(construct_degree_pairing(g, pivot), BoundReason::kDegreePairing);

  if (2 * td.twin_number > n && !is_complete(g)) {
    const VertexMask w = td.unique_tau_set();
    if (induces_empty(g, w)) {
      offer(construct_false_twin(g, w), BoundReason::kFalseTwinExact);
    } else {
      offer(construct_kmedios(g, w), BoundReason::kHalfComplement);
      const VertexMask distinguishing = distinguishing_vertices(g, w);
      if (distinguishing != 0) {
        offer(construct_distinguishing(g, w, lowest(distinguishing)), BoundReason::kDistinguishing);
      }
    }
  }

  if (options.use_metric_dimension) {
    // Candidate count for the smallest admissible subset size.
    double subsets = 1.0;
    for (VertexMask cls : td.classes) subsets *= popcount(cls);
    if (subsets <= static_cast<double>(options.max_metric_subsets)) {
      const MetricDimensionResult beta = metric_dimension(g);
      offer(construct_from_locating_set(g, beta.witness), BoundReason::kMetricDimension);
    }
  }
  return best;
}

Bounds bp_bounds(const Graph& g, const TwinDecomposition& td, const BoundOptions& options) {
  Bounds b{bp_lower_bounds(g, td), bp_upper_bounds(g, td, options)};
  if (b.lower.value > b.upper.value) throw std::logic_error("bp_bounds: lower bound exceeds upper bound");
  return b;
}

LargeTwinClassification classify_large_twin(const Graph& g) {
  if (!is_connected(g)) throw DomainError("classify_large_twin: graph is disconnected");
  if (is_complete(g)) throw DomainError("classify_large_twin: graph is complete");
  const TwinDecomposition td = twin_decomposition(g);
  const int n = g.order();
  if (2 * td.twin_number <= n) throw DomainError("classify_large_twin: requires tau > n/2");
  LargeTwinClassification c;
  c.order = n;
  c.tau = td.twin_number;
  c.tau_set = td.unique_tau_set();
  c.kind = td.kinds[static_cast<std::size_t>(td.tau_sets.front())];
  if (induces_empty(g, c.tau_set)) {
    c.kind = TwinKind::kFalse;
    c.predicted_min = c.predicted_max = c.tau;
  } else {
    c.kind = TwinKind::kTrue;
    c.predicted_min = c.tau + 1;
    c.predicted_max = (n + c.tau) / 2;
  }
  return c;
}

}  // namespace pdim
