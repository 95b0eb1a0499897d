#include "hyperconn/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hyperconn {

namespace {

void add_clique(std::vector<std::vector<VertexId>>& edges, const std::vector<VertexId>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back({members[i], members[j]});
  }
}

std::vector<VertexId> sample_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[uniform_int(rng, i, n - 1)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<VertexId> interval(std::size_t lo, std::size_t hi) {
  std::vector<VertexId> out(hi - lo + 1);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

}  // namespace

Hypergraph fig1_disjoint_cuts() {
  std::vector<std::vector<VertexId>> edges;
  add_clique(edges, {0, 1, 2, 3});
  add_clique(edges, {4, 5, 6, 7});
  edges.push_back({0, 4, 8});
  edges.push_back({1, 5, 8});
  return Hypergraph::from_lists(9, edges);
}

Hypergraph fig2_gap(std::size_t n) {
  if (n < 2) throw InputError("fig2 family needs n >= 2");
  std::vector<std::vector<VertexId>> edges{interval(0, n - 1), interval(n, 2 * n - 1)};
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n + i, 2 * n});
  return Hypergraph::from_lists(2 * n + 1, edges);
}

Hypergraph fig3_chain() { return Hypergraph::from_lists(8, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}}); }

Hypergraph two_books() {
  return Hypergraph::from_lists(7, {{0, 1, 6}, {0, 2, 6}, {1, 2, 6}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}

Hypergraph fano() {
  return Hypergraph::from_lists(7, {{0, 1, 2}, {0, 3, 6}, {0, 4, 5}, {1, 3, 4}, {1, 5, 6}, {2, 3, 5}, {2, 4, 6}});
}

Hypergraph fano_doubled() {
  // 3'..6' are 7..10.
  return Hypergraph::from_lists(11, {{0, 1, 2},
                                     {0, 3, 6},
                                     {0, 4, 5},
                                     {1, 3, 4},
                                     {1, 5, 6},
                                     {2, 3, 5},
                                     {2, 4, 6},
                                     {0, 7, 10},
                                     {0, 8, 9},
                                     {1, 7, 8},
                                     {1, 9, 10},
                                     {2, 7, 9},
                                     {2, 8, 10}});
}

ReductionInstance vc_reduction(const Graph& g) {
  const std::size_t n = g.n;
  if (g.links.empty()) throw InputError("reduction needs a graph with at least one edge");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& link : g.links) {
    if (link.a >= n || link.b >= n) throw InputError("graph edge endpoint out of range");
    if (link.loop()) throw InputError("reduction needs a simple graph (loop found)");
    if (!seen.insert(std::minmax(link.a, link.b)).second) throw InputError("reduction needs a simple graph (parallel edge)");
  }
  ReductionInstance out{Hypergraph{}, interval(n, 2 * n - 1), interval(2 * n, 3 * n - 1), interval(0, n - 1), g};
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) edges.push_back({n + i, j});
  }
  for (const auto& link : g.links) {
    for (std::size_t i = 0; i < n; ++i) edges.push_back({link.a, link.b, 2 * n + i});
  }
  out.hypergraph = Hypergraph::from_lists(3 * n, edges);
  return out;
}

Hypergraph umlaut(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n == 0) throw InputError("umlaut construction needs at least one vertex");
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  edges.push_back(Edge::from_members(std::vector<VertexId>{n, n + 1}));
  edges.push_back(Edge::from_members(interval(0, n + 1)));
  return Hypergraph(n + 2, std::move(edges));
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InputError("empty random range");
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng();
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits; draws above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return lo + draw % range;
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge_size, std::uint64_t seed) {
  if (max_edge_size < 1) throw InputError("max_edge_size must be at least 1");
  if (n == 0 && m > 0) throw InputError("cannot place edges on zero vertices");
  std::mt19937_64 rng(seed);
  const std::size_t lo = std::min<std::size_t>(2, max_edge_size);
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = std::min<std::size_t>(uniform_int(rng, lo, max_edge_size), n);
    edges.push_back(sample_subset(rng, n, size));
  }
  return Hypergraph::from_lists(n, edges);
}

Hypergraph random_interval_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge_size, std::uint64_t seed) {
  if (n < 2) throw InputError("interval generator needs n >= 2");
  if (max_edge_size < 2) throw InputError("interval generator needs max_edge_size >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  // Chain: each interval starts inside the previous one and the last reaches n-1.
  std::size_t lo = 0;
  while (true) {
    const std::size_t hi = std::min(n - 1, lo + uniform_int(rng, 1, max_edge_size - 1));
    spans.emplace_back(lo, hi);
    if (hi == n - 1) break;
    lo = uniform_int(rng, lo + 1, hi);
  }
  while (spans.size() < m) {
    const std::size_t len = uniform_int(rng, 2, std::min(max_edge_size, n));
    const std::size_t start = uniform_int(rng, 0, n - len);
    spans.emplace_back(start, start + len - 1);
  }
  std::vector<VertexId> relabel(n);
  std::iota(relabel.begin(), relabel.end(), VertexId{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(relabel[i], relabel[uniform_int(rng, 0, i)]);
  std::vector<std::vector<VertexId>> edges;
  for (const auto& [a, b] : spans) {
    std::vector<VertexId> e;
    for (std::size_t x = a; x <= b; ++x) e.push_back(relabel[x]);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_lists(n, edges);
}

}  // namespace hyperconn
