#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "pdim/resolve.hpp"

namespace pdim {

Partition Partition::from_assignment(std::vector<int> part_of) {
  const int n = static_cast<int>(part_of.size());
  if (n < 1 || n > kMaxVertices) throw GraphError("partition order out of range");
  int k = 0;
  for (int p : part_of) {
    if (p < 0 || p >= n) throw GraphError("part index " + std::to_string(p) + " out of range");
    k = std::max(k, p + 1);
  }
  std::vector<VertexMask> parts(static_cast<std::size_t>(k), 0);
  for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])] |= bit(v);
  for (int i = 0; i < k; ++i) {
    if (parts[static_cast<std::size_t>(i)] == 0) throw GraphError("part " + std::to_string(i) + " is empty");
  }
  return Partition(std::move(part_of), std::move(parts));
}

Partition Partition::from_parts(int n, const std::vector<VertexMask>& parts) {
  if (n < 1 || n > kMaxVertices) throw GraphError("partition order out of range");
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw GraphError("part " + std::to_string(i) + " is empty");
    if ((parts[i] & ~all_vertices(n)) != 0) throw GraphError("part " + std::to_string(i) + " out of range");
    for (int v : members(parts[i])) {
      if (part_of[static_cast<std::size_t>(v)] >= 0) {
        throw GraphError("vertex " + std::to_string(v) + " in two parts");
      }
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of[static_cast<std::size_t>(v)] < 0) throw GraphError("vertex " + std::to_string(v) + " uncovered");
  }
  return Partition(std::move(part_of), parts);
}

Partition Partition::singletons(int n) {
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) part_of[static_cast<std::size_t>(v)] = v;
  return from_assignment(std::move(part_of));
}

Partition Partition::normalized() const {
  std::vector<int> relabel(parts_.size(), -1);
  std::vector<int> out(part_of_.size());
  int next = 0;
  for (std::size_t v = 0; v < part_of_.size(); ++v) {
    int& r = relabel[static_cast<std::size_t>(part_of_[v])];
    if (r < 0) r = next++;
    out[v] = r;
  }
  return from_assignment(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  for (VertexMask part : parts_) {
    if (!out.empty()) out += ' ';
    out += '{';
    bool first = true;
    for (int v : members(part)) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += '}';
  }
  return out;
}

DistanceVector distance_vector(const DistanceMatrix& dm, const Partition& pi, int u) {
  DistanceVector r(static_cast<std::size_t>(pi.size()));
  for (int i = 0; i < pi.size(); ++i) r[static_cast<std::size_t>(i)] = dm.to_set(u, pi.part(i));
  return r;
}

LocatingCheck is_locating_partition(const DistanceMatrix& dm, const Partition& pi) {
  if (dm.order() != pi.order()) throw GraphError("partition order does not match the graph");
  // Vectors of vertices in different parts already differ at the own-part 0.
  for (VertexMask part : pi.parts()) {
    std::map<DistanceVector, int> seen;
    for (int v : members(part)) {
      auto [it, inserted] = seen.emplace(distance_vector(dm, pi, v), v);
      if (!inserted) return {false, std::make_pair(it->second, v)};
    }
  }
  return {true, std::nullopt};
}

bool is_locating_set(const DistanceMatrix& dm, VertexMask s) {
  const std::vector<int> landmarks = members(s);
  std::map<std::vector<int>, int> seen;
  for (int v = 0; v < dm.order(); ++v) {
    std::vector<int> key;
    key.reserve(landmarks.size());
    for (int x : landmarks) key.push_back(dm.at(v, x));
    if (!seen.emplace(std::move(key), v).second) return false;
  }
  return true;
}

bool separates_twins(const TwinDecomposition& td, const Partition& pi) {
  for (VertexMask part : pi.parts()) {
    for (VertexMask cls : td.classes) {
      if (popcount(part & cls) > 1) return false;
    }
  }
  return true;
}

namespace {

class MetricSearch {
 public:
  MetricSearch(const Graph& g, const TwinDecomposition& td)
      : n_(g.order()), dm_(g), class_of_(td.class_of), classes_(td.classes) {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        VertexMask r = 0;
        for (int x = 0; x < n_; ++x) {
          if (dm_.at(u, x) != dm_.at(v, x)) r |= bit(x);
        }
        resolvers_.push_back(r);
      }
    }
  }

  std::optional<VertexMask> find(int size, SearchStats& stats) {
    stats_ = &stats;
    excluded_in_class_.assign(classes_.size(), 0);
    return dfs(0, 0, 0, size);
  }

 private:
  bool all_pairs_resolvable(VertexMask excluded) const {
    for (VertexMask r : resolvers_) {
      if ((r & ~excluded) == 0) return false;
    }
    return true;
  }

  bool all_pairs_resolved(VertexMask chosen) const {
    for (VertexMask r : resolvers_) {
      if ((r & chosen) == 0) return false;
    }
    return true;
  }

  std::optional<VertexMask> dfs(int v, VertexMask chosen, VertexMask excluded, int remaining) {
    ++stats_->nodes_expanded;
    if (remaining == 0) {
      ++stats_->partitions_tested;
      if (all_pairs_resolved(chosen)) return chosen;
      return std::nullopt;
    }
    if (n_ - v < remaining) return std::nullopt;
    if (!all_pairs_resolvable(excluded)) return std::nullopt;
    const auto cls = static_cast<std::size_t>(class_of_[static_cast<std::size_t>(v)]);
    if (auto found = dfs(v + 1, chosen | bit(v), excluded, remaining - 1)) return found;
    // At most one vertex of each twin class may stay outside.
    if (excluded_in_class_[cls] == 0) {
      excluded_in_class_[cls] = 1;
      auto found = dfs(v + 1, chosen, excluded | bit(v), remaining);
      excluded_in_class_[cls] = 0;
      if (found) return found;
    }
    return std::nullopt;
  }

  int n_;
  DistanceMatrix dm_;
  std::vector<int> class_of_;
  std::vector<VertexMask> classes_;
  std::vector<VertexMask> resolvers_;
  std::vector<int> excluded_in_class_;
  SearchStats* stats_ = nullptr;
};

}  // namespace

MetricDimensionResult metric_dimension(const Graph& g) {
  if (!is_connected(g)) throw DomainError("metric_dimension: graph is disconnected");
  const auto start = std::chrono::steady_clock::now();
  const TwinDecomposition td = twin_decomposition(g);
  int lower = 0;
  for (VertexMask cls : td.classes) lower += popcount(cls) - 1;
  MetricDimensionResult result;
  MetricSearch search(g, td);
  for (int size = lower; size <= g.order(); ++size) {
    if (auto found = search.find(size, result.stats)) {
      result.value = size;
      result.witness = *found;
      break;
    }
  }
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace pdim
