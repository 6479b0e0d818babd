#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdim/graph.hpp"

namespace pdim {

inline constexpr int kMaxCanonicalOrder = 16;

/// graph6 of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Upper triangle of the canonical relabelling, first pair (0,1) in the
/// most significant used bit. Orders up to 16 fit in 120 bits.
struct CanonicalCode {
  int order = 0;
  unsigned __int128 bits = 0;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (a.order != b.order) return a.order <=> b.order;
    if (a.bits == b.bits) return std::strong_ordering::equal;
    return a.bits < b.bits ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

/// Minimum over all labellings reached by equitable refinement and
/// individualisation. Throws DomainError for n > 16.
CanonicalCode canonical_code(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
Graph graph_of(const CanonicalCode& code);

/// Isomorphism invariants compared before any backtracking.
struct Fingerprint {
  int order = 0;
  int edges = 0;
  std::vector<int> degrees;             // sorted
  std::vector<int> distance_counts;     // index d counts ordered pairs at distance d; last slot unreachable
  std::vector<std::pair<int, int>> twin_profile;  // sorted (class size, kind)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Graph& g);

/// Any order. Fingerprints, then joint refinement with backtracking; every
/// candidate bijection is checked edge by edge.
bool are_isomorphic(const Graph& g1, const Graph& g2);

/// One representative per isomorphism class of connected graphs of order n
/// (1 <= n <= 7), by sweeping all edge subsets. Sorted by canonical code,
/// each graph canonically labelled.
std::vector<Graph> enumerate_connected(int n);

/// Same classes for 1 <= n <= 9, built by attaching one vertex to every
/// class of order n-1 in every non-empty way. Sorted by canonical code.
std::vector<Graph> generate_connected(int n);

class CatalogError : public GraphError {
 public:
  CatalogError(const std::string& what, std::size_t line)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Streaming graph6 reader. Blank lines are skipped. A malformed line
/// throws CatalogError; graphs before it have already been returned.
class CatalogReader {
 public:
  explicit CatalogReader(std::istream& in) : in_(in) {}

  std::optional<Graph> next();
  std::size_t line() const { return line_; }
  std::size_t count() const { return count_; }
  /// Number of graphs read per order.
  const std::map<int, std::size_t>& orders() const { return orders_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
  std::size_t count_ = 0;
  std::map<int, std::size_t> orders_;
};

void for_each_in_catalog(std::istream& in, const std::function<void(const Graph&)>& visit);

}  // namespace pdim
