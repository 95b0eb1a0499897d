#pragma once

#include <span>

#include "hyperconn/core.hpp"

namespace hyperconn {

// Deletion-based witness checks. A set "disconnects" when the remaining
// hypergraph has at least two components. Pair checks also require the
// endpoints to survive. All throw InputError on out-of-range ids.

bool verify_weak_vertex_cut(const Hypergraph& h, std::span<const VertexId> cut);
bool verify_strong_vertex_cut(const Hypergraph& h, std::span<const VertexId> cut);
bool verify_weak_disconnecting_set(const Hypergraph& h, std::span<const EdgeId> cut);
bool verify_strong_disconnecting_set(const Hypergraph& h, std::span<const EdgeId> cut);

bool verify_weak_pair_cut(const Hypergraph& h, VertexId u, VertexId v, std::span<const VertexId> cut);
bool verify_strong_pair_cut(const Hypergraph& h, VertexId u, VertexId v, std::span<const VertexId> cut);
bool verify_weak_pair_disconnecting_set(const Hypergraph& h, VertexId u, VertexId v, std::span<const EdgeId> cut);
bool verify_strong_pair_disconnecting_set(const Hypergraph& h, VertexId u, VertexId v, std::span<const EdgeId> cut);

}  // namespace hyperconn
