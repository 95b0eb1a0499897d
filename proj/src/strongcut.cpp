#include "hyperconn/strongcut.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "combinations.hpp"
#include "hyperconn/classes.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/deletion.hpp"
#include "hyperconn/transversal.hpp"
#include "hyperconn/weakflow.hpp"

namespace hyperconn {

namespace {

class SubsetCounter {
 public:
  explicit SubsetCounter(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExceeded("subsets", limit_);
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

bool strongly_disconnects(const Hypergraph& h, std::span<const VertexId> cut) {
  return components(strong_delete_vertices(h, cut).hypergraph).count >= 2;
}

std::vector<VertexId> all_vertices(std::size_t n) {
  std::vector<VertexId> out(n);
  std::iota(out.begin(), out.end(), VertexId{0});
  return out;
}

// Largest cut size worth enumerating: a strong cut leaves >= 2 vertices, and
// the Whitney chain plus kappa_S <= tau cap the minimum from above.
std::size_t enumeration_limit(const Hypergraph& norm, const StrongOptions& options) {
  const std::size_t n = norm.num_vertices();
  std::size_t limit = n - 2;
  if (options.bound_pruning) {
    const std::size_t bound = std::min({min_degree(norm), kappa_w_edge(norm).value, tau(norm).tau, n - 1});
    limit = std::min(limit, bound);
  }
  return limit;
}

}  // namespace

std::string_view to_string(StrongMethod method) {
  switch (method) {
    case StrongMethod::EdgeSize2:
      return "EDGE_SIZE_2";
    case StrongMethod::Arboreal:
      return "ARBOREAL";
    case StrongMethod::Enumeration:
      return "ENUMERATION";
  }
  return "ENUMERATION";
}

StrongCutResult kappa_s(const Hypergraph& h, const StrongOptions& options) {
  const std::size_t n = h.num_vertices();
  if (n <= 1) return {1, {}, false, StrongMethod::Enumeration};
  if (!is_connected(h)) return {0, {}, true, StrongMethod::Enumeration};

  const Hypergraph norm = normalize(h);
  if (options.fast_paths) {
    const bool graph_like = std::all_of(norm.edges().begin(), norm.edges().end(),
                                        [](const Edge& e) { return e.cardinality() <= 2; });
    if (graph_like) {
      CutResult weak = kappa_w(norm);
      return {weak.value, std::move(weak.witness), weak.attained, StrongMethod::EdgeSize2};
    }
    if (n >= 3) {
      if (auto tree = find_representative_tree(norm)) {
        const auto deg = tree->degrees();
        for (VertexId x = 0; x < n; ++x) {
          if (deg[x] >= 2) return {1, {x}, true, StrongMethod::Arboreal};
        }
      }
    }
  }

  const auto pool = all_vertices(n);
  const std::size_t limit = enumeration_limit(norm, options);
  SubsetCounter counter(options.budget.subsets);
  StrongCutResult out{n - 1, {}, false, StrongMethod::Enumeration};
  for (std::size_t k = 1; k <= limit && !out.attained; ++k) {
    detail::for_each_combination(pool, k, [&](const std::vector<VertexId>& cut) {
      counter.tick();
      if (!strongly_disconnects(norm, cut)) return false;
      out = {k, cut, true, StrongMethod::Enumeration};
      return true;
    });
  }
  return out;
}

std::vector<VertexSet> minimum_strong_vertex_cuts(const Hypergraph& h, const StrongOptions& options) {
  const StrongCutResult best = kappa_s(h, options);
  std::vector<VertexSet> out;
  if (!best.attained) return out;
  if (best.value == 0) return {VertexSet{}};
  const Hypergraph norm = normalize(h);
  SubsetCounter counter(options.budget.subsets);
  detail::for_each_combination(all_vertices(h.num_vertices()), best.value, [&](const std::vector<VertexId>& cut) {
    counter.tick();
    if (strongly_disconnects(norm, cut)) out.push_back(cut);
    return false;
  });
  return out;
}

StrongCutResult kappa_s_pair(const Hypergraph& h, VertexId u, VertexId v, const StrongOptions& options) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) throw InputError("pair endpoints must differ");
  const std::size_t n = h.num_vertices();
  const Hypergraph norm = normalize(h);
  const VertexSet both = {std::min(u, v), std::max(u, v)};
  for (const Edge& e : norm.edges()) {
    if (e.support() == both) return {n - 1, {}, false, StrongMethod::Enumeration};
  }

  std::vector<VertexId> pool;
  for (VertexId x = 0; x < n; ++x) {
    if (x != u && x != v) pool.push_back(x);
  }
  SubsetCounter counter(options.budget.subsets);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    StrongCutResult out;
    const bool found = detail::for_each_combination(pool, k, [&](const std::vector<VertexId>& cut) {
      counter.tick();
      const DeletionResult rest = strong_delete_vertices(norm, cut);
      if (!separated(rest.hypergraph, *rest.vertex_map[u], *rest.vertex_map[v])) return false;
      out = {k, cut, true, StrongMethod::Enumeration};
      return true;
    });
    if (found) return out;
  }
  // Unreachable for non-adjacent pairs: deleting every other vertex separates them.
  return {n - 1, {}, false, StrongMethod::Enumeration};
}

Hypergraph path_support_hypergraph(const Hypergraph& h, VertexId u, VertexId v, std::size_t max_paths) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) throw InputError("pair endpoints must differ");
  const std::size_t n = h.num_vertices();
  const auto inc = incident_edges(h);

  std::vector<std::optional<VertexId>> rename(n);
  std::size_t next = 0;
  for (VertexId x = 0; x < n; ++x) {
    if (x != u && x != v) rename[x] = next++;
  }

  std::set<VertexSet> supports;
  std::size_t paths = 0;
  std::vector<char> visited(n, 0);
  std::vector<char> used(h.num_edges(), 0);
  std::vector<int> cover(n, 0);  // how many path edges contain each vertex

  auto add_edge = [&](EdgeId e, int delta) {
    for (const auto& [x, m] : h.edges()[e].multiplicities()) cover[x] += delta;
  };
  auto record = [&]() {
    if (++paths > max_paths) throw BudgetExceeded("paths", max_paths);
    VertexSet supp;
    for (VertexId x = 0; x < n; ++x) {
      if (cover[x] > 0 && rename[x]) supp.push_back(*rename[x]);
    }
    supports.insert(std::move(supp));
  };

  // Depth-first over paths: from x, take an unused edge and step to an
  // unvisited member of it.
  auto extend = [&](auto&& self, VertexId x) -> void {
    for (EdgeId e : inc[x]) {
      if (used[e]) continue;
      used[e] = 1;
      add_edge(e, 1);
      for (const auto& [y, m] : h.edges()[e].multiplicities()) {
        if (visited[y]) continue;
        if (y == v) {
          record();
          continue;
        }
        visited[y] = 1;
        self(self, y);
        visited[y] = 0;
      }
      add_edge(e, -1);
      used[e] = 0;
    }
  };
  visited[u] = 1;
  extend(extend, u);

  std::vector<Edge> edges;
  for (const VertexSet& s : supports) edges.push_back(Edge::from_members(s));
  return Hypergraph(next, std::move(edges));
}

StrongCutResult kappa_s_edge(const Hypergraph& h, const StrongOptions& options) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  if (n <= 1) return {1, {}, false, StrongMethod::Enumeration};
  std::vector<EdgeId> pool(m);
  std::iota(pool.begin(), pool.end(), EdgeId{0});
  SubsetCounter counter(options.budget.subsets);
  for (std::size_t k = 0; k <= m; ++k) {
    StrongCutResult out;
    const bool found = detail::for_each_combination(pool, k, [&](const std::vector<EdgeId>& cut) {
      counter.tick();
      if (components(strong_delete_edges(h, cut).hypergraph).count < 2) return false;
      out = {k, cut, true, StrongMethod::Enumeration};
      return true;
    });
    if (found) return out;
  }
  return {m, {}, false, StrongMethod::Enumeration};
}

StrongCutResult kappa_s_edge_pair(const Hypergraph& h, VertexId u, VertexId v, const StrongOptions& options) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) throw InputError("pair endpoints must differ");
  std::vector<EdgeId> pool;
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    if (!h.edges()[i].contains(u) && !h.edges()[i].contains(v)) pool.push_back(i);
  }
  SubsetCounter counter(options.budget.subsets);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    StrongCutResult out;
    const bool found = detail::for_each_combination(pool, k, [&](const std::vector<EdgeId>& cut) {
      counter.tick();
      const DeletionResult rest = strong_delete_edges(h, cut);
      if (!separated(rest.hypergraph, *rest.vertex_map[u], *rest.vertex_map[v])) return false;
      out = {k, cut, true, StrongMethod::Enumeration};
      return true;
    });
    if (found) return out;
  }
  return {h.num_edges(), {}, false, StrongMethod::Enumeration};
}

}  // namespace hyperconn
