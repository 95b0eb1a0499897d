#include "hyperconn/deletion.hpp"

namespace hyperconn {

namespace {

std::vector<char> vertex_mask(const Hypergraph& h, std::span<const VertexId> removed) {
  std::vector<char> mask(h.num_vertices(), 0);
  for (VertexId v : removed) {
    h.check_vertex(v);
    mask[v] = 1;
  }
  return mask;
}

std::vector<char> edge_mask(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<char> mask(h.num_edges(), 0);
  for (EdgeId e : removed) {
    h.check_edge(e);
    mask[e] = 1;
  }
  return mask;
}

std::vector<std::optional<std::size_t>> renumber(const std::vector<char>& removed, std::size_t& survivors) {
  std::vector<std::optional<std::size_t>> map(removed.size());
  survivors = 0;
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (!removed[i]) map[i] = survivors++;
  }
  return map;
}

// Core routine shared by all four operators: drop the masked edges, drop the
// masked vertices from the remaining edges, renumber.
DeletionResult apply(const Hypergraph& h, const std::vector<char>& gone_vertices,
                     const std::vector<char>& gone_edges) {
  DeletionResult out;
  std::size_t n = 0;
  std::size_t m = 0;
  out.vertex_map = renumber(gone_vertices, n);
  out.edge_map = renumber(gone_edges, m);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    if (gone_edges[i]) continue;
    std::map<VertexId, std::size_t> kept;
    for (const auto& [v, mult] : h.edges()[i].multiplicities()) {
      if (!gone_vertices[v]) kept.emplace(*out.vertex_map[v], mult);
    }
    edges.emplace_back(std::move(kept));
  }
  out.hypergraph = Hypergraph(n, std::move(edges));
  return out;
}

}  // namespace

DeletionResult DeletionResult::then(const DeletionResult& next) const {
  DeletionResult out;
  out.hypergraph = next.hypergraph;
  out.vertex_map.resize(vertex_map.size());
  for (std::size_t i = 0; i < vertex_map.size(); ++i) {
    if (vertex_map[i]) out.vertex_map[i] = next.vertex_map[*vertex_map[i]];
  }
  out.edge_map.resize(edge_map.size());
  for (std::size_t i = 0; i < edge_map.size(); ++i) {
    if (edge_map[i]) out.edge_map[i] = next.edge_map[*edge_map[i]];
  }
  return out;
}

DeletionResult weak_delete_vertices(const Hypergraph& h, std::span<const VertexId> removed) {
  return apply(h, vertex_mask(h, removed), std::vector<char>(h.num_edges(), 0));
}

DeletionResult strong_delete_vertices(const Hypergraph& h, std::span<const VertexId> removed) {
  auto gone_vertices = vertex_mask(h, removed);
  std::vector<char> gone_edges(h.num_edges(), 0);
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    for (const auto& [v, mult] : h.edges()[i].multiplicities()) {
      if (gone_vertices[v]) {
        gone_edges[i] = 1;
        break;
      }
    }
  }
  return apply(h, gone_vertices, gone_edges);
}

DeletionResult weak_delete_edges(const Hypergraph& h, std::span<const EdgeId> removed) {
  return apply(h, std::vector<char>(h.num_vertices(), 0), edge_mask(h, removed));
}

DeletionResult strong_delete_edges(const Hypergraph& h, std::span<const EdgeId> removed) {
  auto gone_edges = edge_mask(h, removed);
  std::vector<char> gone_vertices(h.num_vertices(), 0);
  for (EdgeId e : removed) {
    for (const auto& [v, mult] : h.edges()[e].multiplicities()) gone_vertices[v] = 1;
  }
  return apply(h, gone_vertices, gone_edges);
}

}  // namespace hyperconn
