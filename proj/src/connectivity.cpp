#include "hyperconn/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "hyperconn/deletion.hpp"
#include "hyperconn/transforms.hpp"

namespace hyperconn {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

}  // namespace

ComponentLabeling components(const Hypergraph& h) {
  const auto inc = incident_edges(h);
  ComponentLabeling out{std::vector<std::size_t>(h.num_vertices(), kUnset), 0};
  std::vector<char> edge_seen(h.num_edges(), 0);
  std::deque<VertexId> queue;
  for (VertexId start = 0; start < h.num_vertices(); ++start) {
    if (out.label[start] != kUnset) continue;
    const std::size_t id = out.count++;
    out.label[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : inc[x]) {
        if (edge_seen[e]) continue;
        edge_seen[e] = 1;
        for (const auto& [y, m] : h.edges()[e].multiplicities()) {
          if (out.label[y] == kUnset) {
            out.label[y] = id;
            queue.push_back(y);
          }
        }
      }
    }
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).count <= 1; }

bool separated(const Hypergraph& h, VertexId u, VertexId v) {
  h.check_vertex(u);
  h.check_vertex(v);
  const auto labels = components(h);
  return labels.label[u] != labels.label[v];
}

std::optional<HyperPath> find_path(const Hypergraph& h, VertexId u, VertexId v) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) return HyperPath{{u}, {}};

  const auto inc = incident_edges(h);
  // parent[x] = (previous vertex, edge used to reach x)
  std::vector<std::pair<VertexId, EdgeId>> parent(h.num_vertices(), {kUnset, kUnset});
  std::vector<char> edge_seen(h.num_edges(), 0);
  std::vector<char> reached(h.num_vertices(), 0);
  std::deque<VertexId> queue{u};
  reached[u] = 1;
  while (!queue.empty() && !reached[v]) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : inc[x]) {
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      for (const auto& [y, m] : h.edges()[e].multiplicities()) {
        if (reached[y]) continue;
        reached[y] = 1;
        parent[y] = {x, e};
        queue.push_back(y);
      }
    }
  }
  if (!reached[v]) return std::nullopt;

  HyperPath path;
  for (VertexId x = v; x != u; x = parent[x].first) {
    path.vertices.push_back(x);
    path.edges.push_back(parent[x].second);
  }
  path.vertices.push_back(u);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

bool is_valid_path(const Hypergraph& h, const HyperPath& path) {
  if (path.vertices.size() != path.edges.size() + 1) return false;
  for (VertexId v : path.vertices) {
    if (v >= h.num_vertices()) return false;
  }
  for (EdgeId e : path.edges) {
    if (e >= h.num_edges()) return false;
  }
  for (std::size_t j = 0; j < path.edges.size(); ++j) {
    const Edge& e = h.edges()[path.edges[j]];
    VertexId a = path.vertices[j];
    VertexId b = path.vertices[j + 1];
    if (a == b ? e.multiplicity(a) < 2 : (!e.contains(a) || !e.contains(b))) return false;
  }
  auto distinct = [](std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    return std::adjacent_find(ids.begin(), ids.end()) == ids.end();
  };
  return distinct(path.vertices) && distinct(path.edges);
}

std::vector<std::size_t> articulation_points(const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> disc(n, kUnset);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::size_t timer = 0;

  struct Frame {
    std::size_t node;
    std::size_t parent;
    std::size_t next;  // index into adjacency[node]
    std::size_t children;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    std::vector<Frame> stack{{root, kUnset, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adjacency[f.node].size()) {
        std::size_t y = adjacency[f.node][f.next++];
        if (disc[y] == kUnset) {
          ++f.children;
          disc[y] = low[y] = timer++;
          stack.push_back({y, f.node, 0, 0});
        } else if (y != f.parent) {
          low[f.node] = std::min(low[f.node], disc[y]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.node] = 1;
        continue;
      }
      Frame& up = stack.back();
      low[up.node] = std::min(low[up.node], low[done.node]);
      if (up.parent != kUnset && low[done.node] >= disc[up.node]) is_cut[up.node] = 1;
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_cut[i]) out.push_back(i);
  }
  return out;
}

VertexSet weak_cut_vertices(const Hypergraph& h) {
  const Hypergraph norm = normalize(h);
  const auto points = articulation_points(incidence_graph(norm).adjacency());
  VertexSet out;
  for (std::size_t node : points) {
    if (node < norm.num_vertices()) out.push_back(node);
  }
  return out;
}

VertexSet strong_cut_vertices(const Hypergraph& h) {
  const std::size_t before = components(h).count;
  VertexSet out;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const VertexId removed[] = {v};
    if (components(strong_delete_vertices(h, removed).hypergraph).count > before) out.push_back(v);
  }
  return out;
}

}  // namespace hyperconn
