#pragma once

#include <string_view>
#include <vector>

#include "hyperconn/budget.hpp"
#include "hyperconn/core.hpp"

namespace hyperconn {

enum class StrongMethod { EdgeSize2, Arboreal, Enumeration };

std::string_view to_string(StrongMethod method);

struct StrongCutResult {
  std::size_t value = 0;
  std::vector<std::size_t> witness;
  bool attained = false;
  StrongMethod method = StrongMethod::Enumeration;
};

struct StrongOptions {
  Budget budget;
  /// Allow the max-edge-size-2 and arboreal shortcuts.
  bool fast_paths = true;
  /// Stop the enumeration at min(delta, kappa'_W, tau, |V|-1).
  bool bound_pruning = true;
};

/// Strong vertex connectivity kappa_S(H). Null/trivial input gives 1
/// (unattained), disconnected input 0. Otherwise: graphs delegate to the flow
/// route, arboreal hypergraphs on >= 3 vertices return a non-leaf vertex of a
/// representative tree, everything else is enumerated by increasing size
/// (lexicographic within a size). No cut at all gives |V|-1, unattained.
StrongCutResult kappa_s(const Hypergraph& h, const StrongOptions& options = {});

/// Every minimum strong vertex cut (empty when kappa_S is not attained).
std::vector<VertexSet> minimum_strong_vertex_cuts(const Hypergraph& h, const StrongOptions& options = {});

/// Minimum strong (u,v)-vertex cut. When {u,v} itself is an edge (after
/// normalization) no cut exists and |V|-1 is returned unattained.
StrongCutResult kappa_s_pair(const Hypergraph& h, VertexId u, VertexId v, const StrongOptions& options = {});

/// H'_{u,v}: one edge supp(union of the edges of P) \ {u,v} per (u,v)-path P,
/// duplicates collapsed. Vertex i of the result is the i-th vertex of
/// V \ {u,v} in ascending order. Throws BudgetExceeded past `max_paths` paths.
Hypergraph path_support_hypergraph(const Hypergraph& h, VertexId u, VertexId v,
                                   std::size_t max_paths = Budget{}.paths);

/// Strong edge connectivity kappa'_S(H) by enumeration of edge subsets.
/// |E| (unattained) when no strong disconnecting set exists.
StrongCutResult kappa_s_edge(const Hypergraph& h, const StrongOptions& options = {});

/// Minimum strong (u,v)-disconnecting set. Only edges avoiding u and v are
/// eligible, so both endpoints survive the deletion.
StrongCutResult kappa_s_edge_pair(const Hypergraph& h, VertexId u, VertexId v,
                                  const StrongOptions& options = {});

}  // namespace hyperconn
