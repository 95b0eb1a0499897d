#pragma once

#include <optional>
#include <vector>

#include "hyperconn/core.hpp"

namespace hyperconn {

/// label[v] is the component of v; labels are 0..count-1 in order of each
/// component's smallest vertex.
struct ComponentLabeling {
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

/// Alternating vertex/edge sequence v_1, e_1, ..., e_s, v_{s+1}.
struct HyperPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
};

ComponentLabeling components(const Hypergraph& h);

/// c(H) <= 1; null and trivial hypergraphs count as connected.
bool is_connected(const Hypergraph& h);

/// True when u and v lie in different components.
bool separated(const Hypergraph& h, VertexId u, VertexId v);

/// A shortest (u,v)-path, or nullopt when u and v are separated. For u == v
/// the zero-length path is returned.
std::optional<HyperPath> find_path(const Hypergraph& h, VertexId u, VertexId v);

/// Checks the path invariants: consecutive vertices inside the joining edge
/// (as a multiset), vertices pairwise distinct, edges pairwise distinct.
bool is_valid_path(const Hypergraph& h, const HyperPath& path);

/// Vertices whose weak deletion increases the number of components, found as
/// articulation points of the incidence graph. The hypergraph is normalized
/// first, so edges of cardinality < 2 are ignored.
VertexSet weak_cut_vertices(const Hypergraph& h);

/// Vertices v with c(H \_S v) > c(H), tested one vertex at a time.
VertexSet strong_cut_vertices(const Hypergraph& h);

/// Articulation points of a plain adjacency-list graph.
std::vector<std::size_t> articulation_points(const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace hyperconn
