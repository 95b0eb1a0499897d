#pragma once

#include <utility>
#include <vector>

#include "hyperconn/core.hpp"

namespace hyperconn {

/// Undirected graph. Loops are allowed and flagged; two_section never emits
/// parallel edges.
struct Graph {
  struct Link {
    VertexId a = 0;
    VertexId b = 0;
    bool loop() const { return a == b; }
    friend bool operator==(const Link&, const Link&) = default;
    friend auto operator<=>(const Link&, const Link&) = default;
  };

  std::size_t n = 0;
  std::vector<Link> links;

  /// Adjacency lists with loops dropped.
  std::vector<std::vector<VertexId>> adjacency() const;
  bool has_link(VertexId a, VertexId b) const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Bipartite incidence graph: hypergraph vertices on the left, edge ids on
/// the right, one cross link per (v, e) with the multiplicity m_e(v).
struct BipartiteIncidenceGraph {
  struct Cross {
    VertexId vertex = 0;
    EdgeId edge = 0;
    std::size_t multiplicity = 0;
    friend bool operator==(const Cross&, const Cross&) = default;
  };

  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<Cross> links;

  /// Node numbering used by graph algorithms: vertices 0..left-1, edges after.
  std::size_t edge_node(EdgeId e) const { return left + e; }
  std::vector<std::vector<std::size_t>> adjacency() const;
};

/// Transposes the incidence matrix. Empty edges of h become isolated
/// vertices of the dual.
Hypergraph dual(const Hypergraph& h);

/// [H]_2: {v,w} is an edge iff some hyperedge contains both; a loop at v iff
/// some hyperedge has m_e(v) >= 2.
Graph two_section(const Hypergraph& h);

BipartiteIncidenceGraph incidence_graph(const Hypergraph& h);

}  // namespace hyperconn
