#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "pdim/resolve.hpp"

namespace pdim {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Immutable per-(graph, k) search tables, shared by all workers.
///
/// Vertices are assigned in a fixed order (largest twin class first, then
/// the remaining twin classes by size, then the rest by index) and parts are
/// opened in restricted-growth order. A pair u,v in one part is "determined"
/// once every vertex x with d(u,x) != d(v,x) has been placed: from then on
/// their distance vectors change in lockstep, so equal vectors at that point
/// stay equal forever and the branch is dead.
struct SearchModel {
  SearchModel(const Graph& g, int parts) : n(g.order()), k(parts), dm(g) {
    const TwinDecomposition td = twin_decomposition(g);
    std::vector<int> class_order(td.classes.size());
    for (std::size_t i = 0; i < class_order.size(); ++i) class_order[i] = static_cast<int>(i);
    std::stable_sort(class_order.begin(), class_order.end(), [&td](int a, int b) {
      return popcount(td.classes[static_cast<std::size_t>(a)]) >
             popcount(td.classes[static_cast<std::size_t>(b)]);
    });
    for (int c : class_order) {
      const VertexMask cls = td.classes[static_cast<std::size_t>(c)];
      if (popcount(cls) < 2) continue;
      for (int v : members(cls)) order.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
      if (popcount(td.class_mask_of(v)) < 2) order.push_back(v);
    }
    position.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    twin_mask.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) twin_mask[static_cast<std::size_t>(v)] = td.class_mask_of(v) & ~bit(v);

    layers.resize(static_cast<std::size_t>(n * n));
    for (int u = 0; u < n; ++u) {
      for (int r = 0; r < n; ++r) layers[static_cast<std::size_t>(u * n + r)] = dm.layer(u, r);
    }

    determined_at.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if ((twin_mask[static_cast<std::size_t>(u)] >> v) & 1U) continue;  // handled directly
        int last = std::max(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
        for (int x = 0; x < n; ++x) {
          if (dm.at(u, x) != dm.at(v, x)) last = std::max(last, position[static_cast<std::size_t>(x)]);
        }
        determined_at[static_cast<std::size_t>(last)].emplace_back(u, v);
      }
    }
  }

  int distance_to(int u, VertexMask s) const {
    const VertexMask* row = &layers[static_cast<std::size_t>(u * n)];
    for (int r = 0;; ++r) {
      if (row[r] & s) return r;
    }
  }

  int n;
  int k;
  DistanceMatrix dm;
  std::vector<int> order;
  std::vector<int> position;
  std::vector<VertexMask> twin_mask;
  std::vector<VertexMask> layers;
  std::vector<std::vector<std::pair<int, int>>> determined_at;
};

/// Where the search tree is cut into independently searchable branches.
/// Fixed per model so that statistics do not depend on the thread count.
int split_depth(const SearchModel& m) {
  const int depth = 6;
  return m.n > depth + 2 ? depth : 0;
}

class Searcher {
 public:
  Searcher(const SearchModel& model, std::uint64_t node_limit, const std::atomic<int>* stop_below)
      : m_(model),
        limit_(node_limit),
        stop_below_(stop_below),
        assign_(static_cast<std::size_t>(model.n), -1),
        parts_(static_cast<std::size_t>(model.k), 0) {}

  enum class Result { kFound, kExhausted, kAborted };

  /// Enumerates every surviving prefix of length `depth` in lex order.
  template <typename Visit>
  void prefixes(int depth, Visit&& visit) {
    prefix_depth_ = depth;
    visit_prefix_ = [&visit](const std::vector<int>& prefix) { visit(prefix); };
    (void)descend(0);
    visit_prefix_ = nullptr;
    prefix_depth_ = -1;
  }

  /// Searches the subtree below `prefix` (may be empty).
  Result run(const std::vector<int>& prefix, int branch_index) {
    branch_ = branch_index;
    std::fill(assign_.begin(), assign_.end(), -1);
    std::fill(parts_.begin(), parts_.end(), 0);
    opened_ = 0;
    for (std::size_t pos = 0; pos < prefix.size(); ++pos) place(static_cast<int>(pos), prefix[pos]);
    return descend(static_cast<int>(prefix.size()));
  }

  Partition witness() const {
    std::vector<int> part_of(static_cast<std::size_t>(m_.n));
    for (int pos = 0; pos < m_.n; ++pos) {
      part_of[static_cast<std::size_t>(m_.order[static_cast<std::size_t>(pos)])] =
          assign_[static_cast<std::size_t>(pos)];
    }
    return Partition::from_assignment(std::move(part_of));
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void place(int pos, int part) {
    assign_[static_cast<std::size_t>(pos)] = part;
    parts_[static_cast<std::size_t>(part)] |= bit(m_.order[static_cast<std::size_t>(pos)]);
    if (part == opened_) ++opened_;
  }

  void unplace(int pos, int part) {
    parts_[static_cast<std::size_t>(part)] &= ~bit(m_.order[static_cast<std::size_t>(pos)]);
    assign_[static_cast<std::size_t>(pos)] = -1;
    if (parts_[static_cast<std::size_t>(part)] == 0) --opened_;
  }

  bool pair_dead(int u, int v) const {
    const VertexMask both = bit(u) | bit(v);
    for (int q = 0; q < opened_; ++q) {
      const VertexMask s = parts_[static_cast<std::size_t>(q)];
      if ((s & both) == both) continue;
      if (m_.distance_to(u, s) != m_.distance_to(v, s)) return false;
    }
    return true;
  }

  bool determined_pairs_alive(int pos) const {
    for (const auto& [u, v] : m_.determined_at[static_cast<std::size_t>(pos)]) {
      const int pu = assign_[static_cast<std::size_t>(m_.position[static_cast<std::size_t>(u)])];
      const int pv = assign_[static_cast<std::size_t>(m_.position[static_cast<std::size_t>(v)])];
      if (pu == pv && pair_dead(u, v)) return false;
    }
    return true;
  }

  bool leaf_is_locating() const {
    std::vector<int> buffer;
    for (int p = 0; p < opened_; ++p) {
      const VertexMask part = parts_[static_cast<std::size_t>(p)];
      if (popcount(part) < 2) continue;
      const std::vector<int> vs = members(part);
      buffer.assign(vs.size() * static_cast<std::size_t>(opened_), 0);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int q = 0; q < opened_; ++q) {
          buffer[i * static_cast<std::size_t>(opened_) + static_cast<std::size_t>(q)] =
              q == p ? 0 : m_.distance_to(vs[i], parts_[static_cast<std::size_t>(q)]);
        }
      }
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          if (std::equal(buffer.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(opened_)),
                         buffer.begin() + static_cast<std::ptrdiff_t>((i + 1) * static_cast<std::size_t>(opened_)),
                         buffer.begin() + static_cast<std::ptrdiff_t>(j * static_cast<std::size_t>(opened_)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Result descend(int pos) {
    if (++nodes_ > limit_) return Result::kAborted;
    if (stop_below_ != nullptr && (nodes_ & 1023) == 0 && stop_below_->load(std::memory_order_relaxed) < branch_) {
      return Result::kAborted;
    }
    if (pos == prefix_depth_) {
      visit_prefix_(std::vector<int>(assign_.begin(), assign_.begin() + pos));
      return Result::kExhausted;
    }
    if (pos == m_.n) {
      if (opened_ != m_.k) return Result::kExhausted;
      ++leaves_;
      return leaf_is_locating() ? Result::kFound : Result::kExhausted;
    }
    const int v = m_.order[static_cast<std::size_t>(pos)];
    const int remaining = m_.n - pos - 1;
    const int top = std::min(opened_, m_.k - 1);
    for (int p = 0; p <= top; ++p) {
      if (parts_[static_cast<std::size_t>(p)] & m_.twin_mask[static_cast<std::size_t>(v)]) continue;
      const int opened_after = opened_ + (p == opened_ ? 1 : 0);
      if (opened_after + remaining < m_.k) continue;
      place(pos, p);
      Result r = Result::kExhausted;
      if (determined_pairs_alive(pos)) r = descend(pos + 1);
      if (r == Result::kFound) return r;
      unplace(pos, p);
      if (r == Result::kAborted) return r;
    }
    return Result::kExhausted;
  }

  const SearchModel& m_;
  std::uint64_t limit_;
  const std::atomic<int>* stop_below_;
  int branch_ = 0;
  std::vector<int> assign_;
  std::vector<VertexMask> parts_;
  int opened_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  int prefix_depth_ = -1;
  std::function<void(const std::vector<int>&)> visit_prefix_;
};

struct BranchOutcome {
  Searcher::Result result = Searcher::Result::kExhausted;
  bool ran = false;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::optional<Partition> witness;
};

LevelResult run_level(const SearchModel& model, const SolveOptions& options) {
  const auto start = Clock::now();
  LevelResult out;
  const std::uint64_t budget = options.budget;

  // Branch list from a fixed cut depth; prefix nodes are counted once.
  std::vector<std::vector<int>> branches;
  std::uint64_t prefix_nodes = 0;
  const int depth = split_depth(model);
  if (depth == 0) {
    branches.emplace_back();
  } else {
    Searcher cutter(model, std::numeric_limits<std::uint64_t>::max(), nullptr);
    cutter.prefixes(depth, [&branches](const std::vector<int>& p) { branches.push_back(p); });
    prefix_nodes = cutter.nodes();
  }
  if (prefix_nodes > budget) {
    out.outcome = LevelOutcome::kBudget;
    out.stats.nodes_expanded = prefix_nodes;
    out.stats.wall_ms = elapsed_ms(start);
    return out;
  }
  std::vector<BranchOutcome> outcomes(branches.size());
  std::atomic<int> decided{std::numeric_limits<int>::max()};  // least found/aborted branch
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> spent{prefix_nodes};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= branches.size()) return;
      if (static_cast<int>(i) > decided.load()) continue;
      const std::uint64_t used = spent.load();
      // With one worker this is exactly the budget left in index order.
      const std::uint64_t limit = used >= budget ? 0 : budget - used;
      Searcher searcher(model, limit, &decided);
      const auto r = searcher.run(branches[i], static_cast<int>(i));
      BranchOutcome& o = outcomes[i];
      o.ran = true;
      o.result = r;
      o.nodes = searcher.nodes();
      o.leaves = searcher.leaves();
      if (r == Searcher::Result::kFound) o.witness = searcher.witness();
      if (r == Searcher::Result::kAborted && searcher.nodes() <= limit) {
        o.ran = false;  // an earlier branch decided first
        continue;
      }
      spent.fetch_add(o.nodes);
      if (r != Searcher::Result::kExhausted) {
        int cur = decided.load();
        while (static_cast<int>(i) < cur && !decided.compare_exchange_weak(cur, static_cast<int>(i))) {
        }
      }
    }
  };
  int threads = options.threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : options.threads;
  threads = std::max(1, std::min<int>(threads, static_cast<int>(branches.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Order-independent reduction: replay branches in index order.
  out.stats.nodes_expanded = prefix_nodes;
  out.outcome = LevelOutcome::kExhausted;
  for (BranchOutcome& o : outcomes) {
    if (!o.ran) throw std::logic_error("search reduction reached a cancelled branch");
    out.stats.nodes_expanded += o.nodes;
    out.stats.partitions_tested += o.leaves;
    if (o.result == Searcher::Result::kAborted || out.stats.nodes_expanded > budget) {
      out.outcome = LevelOutcome::kBudget;
      break;
    }
    if (o.result == Searcher::Result::kFound) {
      out.outcome = LevelOutcome::kFound;
      out.witness = std::move(o.witness);
      break;
    }
  }
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw DomainError(std::string(who) + ": graph is disconnected");
}

}  // namespace

LevelResult search_level(const Graph& g, int k, const SolveOptions& options) {
  require_connected(g, "search_level");
  if (k < 1 || k > g.order()) {
    LevelResult none;
    none.outcome = LevelOutcome::kExhausted;
    return none;
  }
  const SearchModel model(g, k);
  return run_level(model, options);
}

PartitionDimensionResult partition_dimension(const Graph& g, const SolveOptions& options) {
  require_connected(g, "partition_dimension");
  const auto start = Clock::now();
  const TwinDecomposition td = twin_decomposition(g);
  PartitionDimensionResult result;
  result.bounds = bp_bounds(g, td, options.bounds);
  result.proven_lower = result.bounds.lower.value;

  SolveOptions remaining = options;
  for (int k = result.bounds.lower.value; k <= result.bounds.upper.value; ++k) {
    const SearchModel model(g, k);
    LevelResult level = run_level(model, remaining);
    result.stats.nodes_expanded += level.stats.nodes_expanded;
    result.stats.partitions_tested += level.stats.partitions_tested;
    result.levels.push_back({k, level.outcome == LevelOutcome::kFound, level.stats.nodes_expanded,
                             level.stats.partitions_tested});
    if (level.outcome == LevelOutcome::kFound) {
      result.status = SolveStatus::kExact;
      result.value = k;
      result.witness = std::move(*level.witness);
      result.proven_lower = k;
      result.stats.wall_ms = elapsed_ms(start);
      return result;
    }
    if (level.outcome == LevelOutcome::kBudget || result.stats.nodes_expanded > options.budget) {
      result.status = SolveStatus::kUnknown;
      result.value = result.bounds.upper.value;
      result.witness = result.bounds.upper.witness;
      result.stats.wall_ms = elapsed_ms(start);
      return result;
    }
    result.proven_lower = k + 1;
    remaining.budget = options.budget - result.stats.nodes_expanded;
  }
  throw std::logic_error("partition_dimension: no locating partition at the upper bound");
}

PartitionDimensionResult partition_dimension_naive(const Graph& g) {
  require_connected(g, "partition_dimension_naive");
  const int n = g.order();
  if (n > 8) throw DomainError("partition_dimension_naive: refuses n > 8");
  const auto start = Clock::now();
  const DistanceMatrix dm(g);
  PartitionDimensionResult result;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);

  for (int k = 1; k <= n; ++k) {
    std::optional<Partition> found;
    LevelRecord level{k, false, 0, 0};
    // Every restricted growth string with at most k parts; keep exactly k.
    auto rec = [&](auto&& self, int pos, int used) -> void {
      if (found) return;
      ++level.nodes_expanded;
      if (pos == n) {
        if (used != k) return;
        ++level.partitions_tested;
        Partition pi = Partition::from_assignment(rgs);
        if (is_locating_partition(dm, pi)) found = std::move(pi);
        return;
      }
      for (int p = 0; p <= std::min(used, k - 1); ++p) {
        rgs[static_cast<std::size_t>(pos)] = p;
        self(self, pos + 1, std::max(used, p + 1));
      }
    };
    rec(rec, 0, 0);
    result.stats.nodes_expanded += level.nodes_expanded;
    result.stats.partitions_tested += level.partitions_tested;
    level.found = found.has_value();
    result.levels.push_back(level);
    if (found) {
      result.value = k;
      result.proven_lower = k;
      result.witness = std::move(*found);
      result.bounds.lower = {k, BoundReason::kTrivial};
      result.bounds.upper = {k, BoundReason::kSingletons, result.witness};
      break;
    }
  }
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

}  // namespace pdim
