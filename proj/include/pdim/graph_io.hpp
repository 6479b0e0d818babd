#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pdim/graph.hpp"

namespace pdim {

/// Malformed graph6 record; offset() is the 0-based byte position of the
/// first offending byte.
class Graph6Error : public GraphError {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 record. A single trailing '\n' (or "\r\n") is accepted;
/// the optional ">>graph6<<" header is not.
Graph parse_graph6(std::string_view line);

/// Encodes g (order <= 62) without a trailing newline.
std::string write_graph6(const Graph& g);

/// Plain-text fixture format: first line n, then one "u v" pair per line.
/// Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace pdim
