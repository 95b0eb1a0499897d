#pragma once

#include "hyperconn/core.hpp"

namespace hyperconn {

/// Minimum transversal (hitting set) of the nonempty edges.
struct TransversalResult {
  std::size_t tau = 0;
  VertexSet witness;
};

/// Maximum matching: pairwise disjoint nonempty edges.
struct MatchingResult {
  std::size_t alpha = 0;
  EdgeSet witness;
};

/// Exact tau(H) by branch and bound. Vertices of cardinality-1 edges are
/// forced first; branching walks the smallest uncovered edge in ascending
/// vertex order; the bound is a greedy packing of disjoint uncovered edges.
TransversalResult tau(const Hypergraph& h);

/// Exact alpha(H) by branch and bound on the lowest still-coverable vertex,
/// bounded by a greedy transversal of what remains.
MatchingResult alpha(const Hypergraph& h);

/// Max-degree-first greedy transversal (ties to the lowest id). Always valid,
/// not necessarily minimum.
VertexSet greedy_transversal(const Hypergraph& h);

/// alpha(H) == tau(H).
bool has_konig(const Hypergraph& h);

/// True when `candidate` meets every nonempty edge.
bool is_transversal(const Hypergraph& h, std::span<const VertexId> candidate);

/// True when the listed edges are nonempty and pairwise disjoint.
bool is_matching(const Hypergraph& h, std::span<const EdgeId> candidate);

}  // namespace hyperconn
