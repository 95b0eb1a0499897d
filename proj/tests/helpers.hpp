#pragma once

#include <cstdint>
#include <vector>

#include "hyperconn/core.hpp"
#include "hyperconn/generators.hpp"

namespace testing_support {

using hyperconn::Hypergraph;

inline Hypergraph H(std::size_t n, const std::vector<std::vector<hyperconn::VertexId>>& edges) {
  return Hypergraph::from_lists(n, edges);
}

// Seeded random instance with its own size parameters drawn from the seed.
inline Hypergraph random_instance(std::uint64_t seed, std::size_t max_n, std::size_t max_m, std::size_t max_edge) {
  std::mt19937_64 rng(seed * 7919 + 17);
  const std::size_t n = hyperconn::uniform_int(rng, 2, max_n);
  const std::size_t m = hyperconn::uniform_int(rng, 1, max_m);
  return hyperconn::random_hypergraph(n, m, max_edge, seed);
}

}  // namespace testing_support
