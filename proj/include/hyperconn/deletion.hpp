#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperconn/core.hpp"

namespace hyperconn {

/// Outcome of a deletion: the new hypergraph plus maps from the caller's ids
/// to the ids in the result (nullopt when the element was removed).
/// Survivors are renumbered densely in their original order.
struct DeletionResult {
  Hypergraph hypergraph;
  std::vector<std::optional<VertexId>> vertex_map;
  std::vector<std::optional<EdgeId>> edge_map;

  /// Applies `next` (performed on this->hypergraph) after this deletion.
  DeletionResult then(const DeletionResult& next) const;
};

/// H \_W X: drops X and every occurrence of X inside edges. Emptied edges stay.
DeletionResult weak_delete_vertices(const Hypergraph& h, std::span<const VertexId> removed);

/// H \_S X: drops X and every edge whose support meets X.
DeletionResult strong_delete_vertices(const Hypergraph& h, std::span<const VertexId> removed);

/// H \_W F: drops the edges F; vertices untouched.
DeletionResult weak_delete_edges(const Hypergraph& h, std::span<const EdgeId> removed);

/// H \_S F: drops the edges F, then weakly deletes every vertex of their supports.
DeletionResult strong_delete_edges(const Hypergraph& h, std::span<const EdgeId> removed);

}  // namespace hyperconn
