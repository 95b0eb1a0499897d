#include "hyperconn/core.hpp"

#include <algorithm>
#include <set>

namespace hyperconn {

BudgetExceeded::BudgetExceeded(std::string budget, std::size_t limit)
    : std::runtime_error("budget '" + budget + "' exhausted (limit " + std::to_string(limit) + ")"),
      budget_(std::move(budget)),
      limit_(limit) {}

Edge::Edge(std::map<VertexId, std::size_t> multiplicities) : mult_(std::move(multiplicities)) {
  for (const auto& [v, m] : mult_) {
    if (m == 0) throw InputError("edge multiplicity of vertex " + std::to_string(v) + " is zero");
  }
}

Edge::Edge(std::initializer_list<VertexId> members) {
  for (VertexId v : members) ++mult_[v];
}

Edge Edge::from_members(std::span<const VertexId> members) {
  Edge e;
  for (VertexId v : members) ++e.mult_[v];
  return e;
}

std::size_t Edge::multiplicity(VertexId v) const {
  auto it = mult_.find(v);
  return it == mult_.end() ? 0 : it->second;
}

std::size_t Edge::size() const {
  std::size_t total = 0;
  for (const auto& [v, m] : mult_) total += m;
  return total;
}

VertexSet Edge::support() const {
  VertexSet out;
  out.reserve(mult_.size());
  for (const auto& [v, m] : mult_) out.push_back(v);
  return out;
}

std::vector<VertexId> Edge::members() const {
  std::vector<VertexId> out;
  for (const auto& [v, m] : mult_) out.insert(out.end(), m, v);
  return out;
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& mult = edges_[i].multiplicities();
    if (!mult.empty() && mult.rbegin()->first >= n_) {
      throw InputError("edge " + std::to_string(i) + " references vertex " +
                       std::to_string(mult.rbegin()->first) + " but n = " + std::to_string(n_));
    }
  }
}

Hypergraph Hypergraph::from_lists(std::size_t n, const std::vector<std::vector<VertexId>>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& members : edges) out.push_back(Edge::from_members(members));
  return Hypergraph(n, std::move(out));
}

const Edge& Hypergraph::edge(EdgeId id) const {
  check_edge(id);
  return edges_[id];
}

void Hypergraph::check_vertex(VertexId v) const {
  if (v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n_) + ")");
}

void Hypergraph::check_edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw InputError("edge " + std::to_string(e) + " out of range (m = " + std::to_string(edges_.size()) + ")");
  }
}

std::size_t degree(const Hypergraph& h, VertexId v) {
  h.check_vertex(v);
  std::size_t d = 0;
  for (const Edge& e : h.edges()) d += e.multiplicity(v);
  return d;
}

std::size_t min_degree(const Hypergraph& h) {
  if (h.is_null()) throw InputError("minimum degree of the null hypergraph is undefined");
  std::vector<std::size_t> deg(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    for (const auto& [v, m] : e.multiplicities()) deg[v] += m;
  }
  return *std::min_element(deg.begin(), deg.end());
}

std::size_t max_edge_size(const Hypergraph& h) {
  std::size_t best = 0;
  for (const Edge& e : h.edges()) best = std::max(best, e.size());
  return best;
}

Hypergraph normalize(const Hypergraph& h) {
  std::set<VertexSet> seen;
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    if (e.cardinality() < 2) continue;
    VertexSet supp = e.support();
    if (!seen.insert(supp).second) continue;
    out.push_back(Edge::from_members(supp));
  }
  return Hypergraph(h.num_vertices(), std::move(out));
}

bool is_simple(const Hypergraph& h) {
  std::set<Edge> seen;
  for (const Edge& e : h.edges()) {
    if (e.size() != e.cardinality()) return false;
    if (!seen.insert(e).second) return false;
  }
  return true;
}

std::vector<std::vector<EdgeId>> incident_edges(const Hypergraph& h) {
  std::vector<std::vector<EdgeId>> inc(h.num_vertices());
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    for (const auto& [v, m] : h.edges()[i].multiplicities()) inc[v].push_back(i);
  }
  return inc;
}

IncidenceMatrix IncidenceMatrix::transposed() const {
  IncidenceMatrix t{cols, rows, std::vector<std::size_t>(entries.size(), 0)};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t.entries[c * rows + r] = at(r, c);
  }
  return t;
}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix m{h.num_vertices(), h.num_edges(),
                    std::vector<std::size_t>(h.num_vertices() * h.num_edges(), 0)};
  for (EdgeId j = 0; j < h.num_edges(); ++j) {
    for (const auto& [v, mult] : h.edges()[j].multiplicities()) m.entries[v * m.cols + j] = mult;
  }
  return m;
}

std::vector<std::size_t> canonical_set(std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace hyperconn
