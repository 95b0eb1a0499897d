#pragma once

#include <optional>
#include <vector>

#include "hyperconn/core.hpp"

namespace hyperconn {

/// Result of a cut computation. `witness` holds vertex ids or edge ids in the
/// caller's numbering. `attained` is false when `value` is a convention value
/// (|V|-1 for vertex cuts, |E| for strong disconnecting sets, 1 for null or
/// trivial input) and no cut backs it.
struct CutResult {
  std::size_t value = 0;
  std::vector<std::size_t> witness;
  bool attained = false;

  friend bool operator==(const CutResult&, const CutResult&) = default;
};

/// Directed network with unit and "infinite" capacities. Infinity is one more
/// than the number of unit arcs, so any finite cut is strictly below it.
struct FlowNetwork {
  enum class NodeKind { VertexIn, VertexOut, Vertex, EdgeNode, EdgeIn, EdgeOut };

  struct Node {
    NodeKind kind;
    std::size_t ref;  // vertex id or edge id of the hypergraph
  };

  struct Arc {
    std::size_t from;
    std::size_t to;
    std::size_t capacity;
  };

  std::vector<Node> nodes;
  std::vector<Arc> arcs;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::size_t infinity = 1;

  std::size_t unit_arc_count() const;
};

struct MaxFlowResult {
  std::size_t value = 0;
  /// Nodes reachable from the source in the final residual network.
  std::vector<char> source_side;
  /// Flow on each arc of the network, parallel to FlowNetwork::arcs.
  std::vector<std::size_t> arc_flow;

  bool infinite(const FlowNetwork& net) const { return value >= net.infinity; }
};

/// Vertex-split network for separating u from v: every other vertex x gets an
/// (x_in, x_out) unit arc, every edge becomes a node, incidences become
/// infinite arcs. Only u_out and v_in exist for the terminals.
/// Requires u != v; the hypergraph is used as given (callers normalize).
FlowNetwork build_vertex_split_network(const Hypergraph& h, VertexId u, VertexId v);

/// Edge-split network: vertices are plain nodes, each nonempty edge becomes an
/// (e_in, e_out) unit arc. Parallel edges stay distinct.
FlowNetwork build_edge_split_network(const Hypergraph& h, VertexId u, VertexId v);

/// Edmonds-Karp (BFS shortest augmenting paths). Stops early once the flow
/// reaches net.infinity.
MaxFlowResult max_flow_min_cut(const FlowNetwork& net);

/// Splits an integral flow into unit source-sink paths (node sequences).
std::vector<std::vector<std::size_t>> decompose_flow(const FlowNetwork& net, const MaxFlowResult& flow);

/// Minimum weak (u,v)-vertex cut. Adjacent u,v give |V|-1 with attained=false.
CutResult kappa_w_pair(const Hypergraph& h, VertexId u, VertexId v);

enum class PairSearch {
  /// Fix a minimum-degree vertex of the 2-section, pair it with every
  /// non-neighbour, and pair up its non-adjacent neighbours.
  Reduced,
  /// Every unordered pair.
  AllPairs,
};

/// Weak vertex connectivity kappa_W(H) with its witness.
CutResult kappa_w(const Hypergraph& h, PairSearch mode = PairSearch::Reduced);

/// Edges whose support meets both X and V \ X. Requires X to be a proper
/// nonempty subset of V.
EdgeSet boundary(const Hypergraph& h, std::span<const VertexId> side);

/// Minimum weak (u,v)-disconnecting set of edges.
CutResult kappa_w_edge_pair(const Hypergraph& h, VertexId u, VertexId v);

/// Weak edge connectivity kappa'_W(H).
CutResult kappa_w_edge(const Hypergraph& h, PairSearch mode = PairSearch::Reduced);

}  // namespace hyperconn
