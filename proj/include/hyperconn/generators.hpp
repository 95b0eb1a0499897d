#pragma once

#include <cstdint>
#include <random>

#include "hyperconn/core.hpp"
#include "hyperconn/transforms.hpp"

namespace hyperconn {

/// Vertex-cover reduction output with the id sets needed to read results
/// back in terms of the source graph.
struct ReductionInstance {
  Hypergraph hypergraph;
  VertexSet a_u;
  VertexSet a_v;
  VertexSet v_g;
  Graph source_graph;
};

/// Two K4s on x1..x4 (ids 0..3) and y1..y4 (ids 4..7) plus z (id 8), joined by
/// {x1,y1,z} and {x2,y2,z}. Minimum weak and strong cuts are disjoint.
Hypergraph fig1_disjoint_cuts();

/// x1..xn = 0..n-1, y1..yn = n..2n-1, z = 2n. Edges {x1..xn}, {y1..yn} and
/// {xi,yi,z} for each i. Throws InputError for n < 2.
Hypergraph fig2_gap(std::size_t n);

/// Eight vertices in columns {0,1},{2,3},{4,5},{6,7}; three edges, each the
/// union of two neighbouring columns.
Hypergraph fig3_chain();

/// x1..x3 = 0..2, y1..y3 = 3..5, z = 6; edges {xi,xj,z} and {yi,yj,z}.
Hypergraph two_books();

/// The seven lines of the Fano plane on 0..6.
Hypergraph fano();

/// Fano lines on 0..6 plus six lines through a second copy 3'..6' (ids
/// 7..10) sharing the line {0,1,2}. 11 vertices, 13 edges.
Hypergraph fano_doubled();

/// For a simple graph G on n vertices: x_j = j, u_i = n+i, v_i = 2n+i.
/// Edges {u_i, x_j} for all i, j, then e + {v_i} for each edge e of G and
/// each i. Throws InputError when G has no edges or is not simple.
ReductionInstance vc_reduction(const Graph& g);

/// Adds u1 = n and u2 = n+1 with edges {u1,u2} and {u1,u2} + V.
/// Throws InputError on the null hypergraph.
Hypergraph umlaut(const Hypergraph& h);

/// Uniform integer in [lo, hi] by rejection, identical on every platform.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// m random edges on n vertices. Each edge size is uniform in
/// [min(2, max_edge_size), max_edge_size] capped at n, and its support is a
/// uniform subset of that size. Deterministic for a fixed seed (mt19937_64).
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge_size, std::uint64_t seed);

/// Connected interval hypergraph on n >= 2 vertices: a chain of overlapping
/// intervals covering the line plus extra random intervals up to m edges,
/// then relabelled by a random permutation.
Hypergraph random_interval_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge_size, std::uint64_t seed);

}  // namespace hyperconn
