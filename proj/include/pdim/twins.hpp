#pragma once

#include <string_view>
#include <vector>

#include "pdim/graph.hpp"

namespace pdim {

enum class TwinKind { kSingleton, kTrue, kFalse };

std::string_view to_string(TwinKind kind);

/// Equivalence classes of the twin relation. Classes are ordered by their
/// least vertex; tau_sets holds the indices of every class of maximum size.
struct TwinDecomposition {
  std::vector<VertexMask> classes;
  std::vector<TwinKind> kinds;
  std::vector<int> class_of;  // per vertex
  int twin_number = 1;
  std::vector<int> tau_sets;

  VertexMask class_mask_of(int v) const {
    return classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
  }
  /// The least-index maximum class.
  VertexMask first_tau_set() const { return classes[static_cast<std::size_t>(tau_sets.front())]; }
  /// Throws DomainError unless exactly one class attains the twin number.
  VertexMask unique_tau_set() const;
};

/// N(u)\{v} == N(v)\{u}. Throws DomainError when u == v.
bool are_twins(const Graph& g, int u, int v);

TwinDecomposition twin_decomposition(const Graph& g);

/// Vertices v outside the clique tau-set w with d(v,z) != d(v,W) for every
/// z in N(W)\W. Throws DomainError if w is not a clique tau-set of a
/// connected g.
VertexMask distinguishing_vertices(const Graph& g, VertexMask w);

/// N(W) \ W.
VertexMask outer_neighborhood(const Graph& g, VertexMask w);

}  // namespace pdim
