#include "hyperconn/transforms.hpp"

#include <algorithm>
#include <set>

namespace hyperconn {

std::vector<std::vector<VertexId>> Graph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n);
  for (const Link& l : links) {
    if (l.loop()) continue;
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool Graph::has_link(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  return std::find(links.begin(), links.end(), Link{a, b}) != links.end();
}

std::vector<std::vector<std::size_t>> BipartiteIncidenceGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(left + right);
  for (const Cross& c : links) {
    adj[c.vertex].push_back(edge_node(c.edge));
    adj[edge_node(c.edge)].push_back(c.vertex);
  }
  return adj;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::map<VertexId, std::size_t>> rows(h.num_vertices());
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    for (const auto& [v, m] : h.edges()[i].multiplicities()) rows[v][i] = m;
  }
  std::vector<Edge> edges;
  edges.reserve(rows.size());
  for (auto& row : rows) edges.emplace_back(std::move(row));
  return Hypergraph(h.num_edges(), std::move(edges));
}

Graph two_section(const Hypergraph& h) {
  std::set<Graph::Link> links;
  for (const Edge& e : h.edges()) {
    const auto& mult = e.multiplicities();
    for (auto it = mult.begin(); it != mult.end(); ++it) {
      if (it->second >= 2) links.insert({it->first, it->first});
      for (auto jt = std::next(it); jt != mult.end(); ++jt) links.insert({it->first, jt->first});
    }
  }
  return Graph{h.num_vertices(), {links.begin(), links.end()}};
}

BipartiteIncidenceGraph incidence_graph(const Hypergraph& h) {
  BipartiteIncidenceGraph g{h.num_vertices(), h.num_edges(), {}};
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    for (const auto& [v, m] : h.edges()[i].multiplicities()) g.links.push_back({v, i, m});
  }
  return g;
}

}  // namespace hyperconn
