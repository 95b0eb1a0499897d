#include "hyperconn/verify.hpp"

#include "hyperconn/connectivity.hpp"
#include "hyperconn/deletion.hpp"

namespace hyperconn {

namespace {

bool splits(const DeletionResult& rest) { return components(rest.hypergraph).count >= 2; }

bool splits_pair(const DeletionResult& rest, VertexId u, VertexId v) {
  const auto nu = rest.vertex_map[u];
  const auto nv = rest.vertex_map[v];
  return nu && nv && separated(rest.hypergraph, *nu, *nv);
}

void check_pair(const Hypergraph& h, VertexId u, VertexId v) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) throw InputError("pair endpoints must differ");
}

}  // namespace

bool verify_weak_vertex_cut(const Hypergraph& h, std::span<const VertexId> cut) {
  return splits(weak_delete_vertices(h, cut));
}

bool verify_strong_vertex_cut(const Hypergraph& h, std::span<const VertexId> cut) {
  return splits(strong_delete_vertices(h, cut));
}

bool verify_weak_disconnecting_set(const Hypergraph& h, std::span<const EdgeId> cut) {
  return splits(weak_delete_edges(h, cut));
}

bool verify_strong_disconnecting_set(const Hypergraph& h, std::span<const EdgeId> cut) {
  return splits(strong_delete_edges(h, cut));
}

bool verify_weak_pair_cut(const Hypergraph& h, VertexId u, VertexId v, std::span<const VertexId> cut) {
  check_pair(h, u, v);
  return splits_pair(weak_delete_vertices(h, cut), u, v);
}

bool verify_strong_pair_cut(const Hypergraph& h, VertexId u, VertexId v, std::span<const VertexId> cut) {
  check_pair(h, u, v);
  return splits_pair(strong_delete_vertices(h, cut), u, v);
}

bool verify_weak_pair_disconnecting_set(const Hypergraph& h, VertexId u, VertexId v, std::span<const EdgeId> cut) {
  check_pair(h, u, v);
  return splits_pair(weak_delete_edges(h, cut), u, v);
}

bool verify_strong_pair_disconnecting_set(const Hypergraph& h, VertexId u, VertexId v, std::span<const EdgeId> cut) {
  check_pair(h, u, v);
  return splits_pair(strong_delete_edges(h, cut), u, v);
}

}  // namespace hyperconn
