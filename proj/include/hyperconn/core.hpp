#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperconn {

/// Dense 0-based vertex identifier. Vertices of a hypergraph are 0..n-1.
using VertexId = std::size_t;
/// Position of an edge in the hypergraph's edge list.
using EdgeId = std::size_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;
/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

/// Malformed input: out-of-range ids, violated preconditions, bad files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search hit its configured limit before finishing.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, std::size_t limit);

  const std::string& budget() const { return budget_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string budget_;
  std::size_t limit_;
};

/// A multiset of vertices. Stores m_e(v) for every vertex of the support;
/// every stored multiplicity is at least 1.
class Edge {
 public:
  Edge() = default;
  explicit Edge(std::map<VertexId, std::size_t> multiplicities);
  /// Builds an edge from a flat list; a repeated vertex raises its multiplicity.
  Edge(std::initializer_list<VertexId> members);
  static Edge from_members(std::span<const VertexId> members);

  std::size_t multiplicity(VertexId v) const;
  bool contains(VertexId v) const { return mult_.count(v) != 0; }
  /// Number of elements counted with multiplicity, |e|.
  std::size_t size() const;
  /// Number of distinct members, |supp(e)|.
  std::size_t cardinality() const { return mult_.size(); }
  bool empty() const { return mult_.empty(); }
  VertexSet support() const;
  /// Flat member list in ascending order, each vertex repeated m_e(v) times.
  std::vector<VertexId> members() const;

  const std::map<VertexId, std::size_t>& multiplicities() const { return mult_; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  std::map<VertexId, std::size_t> mult_;
};

/// H = (V, E) with V = {0..n-1} and E an indexed multiset of edges.
/// Values are immutable once built; every operation returns a new hypergraph.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws InputError when an edge references a vertex >= n.
  Hypergraph(std::size_t n, std::vector<Edge> edges);

  /// Convenience constructor from flat member lists.
  static Hypergraph from_lists(std::size_t n, const std::vector<std::vector<VertexId>>& edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const;
  std::span<const Edge> edges() const { return edges_; }

  bool is_null() const { return n_ == 0; }
  bool is_trivial() const { return n_ == 1; }
  bool is_nontrivial() const { return n_ >= 2; }

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// deg(v) = sum over edges of m_e(v).
std::size_t degree(const Hypergraph& h, VertexId v);

/// delta(H). Throws InputError on the null hypergraph.
std::size_t min_degree(const Hypergraph& h);

/// Largest edge size |e| (0 for an edgeless hypergraph).
std::size_t max_edge_size(const Hypergraph& h);

/// Collapses parallel edges, clamps multiplicities to 1 and drops edges whose
/// support has fewer than two vertices. The vertex set is kept as is, isolated
/// vertices included. Surviving edges keep their relative order.
Hypergraph normalize(const Hypergraph& h);

/// No parallel edges and every edge is a set.
bool is_simple(const Hypergraph& h);

/// For each vertex, the ids of the edges containing it (ascending).
std::vector<std::vector<EdgeId>> incident_edges(const Hypergraph& h);

struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> entries;  // row-major

  std::size_t at(std::size_t row, std::size_t col) const { return entries[row * cols + col]; }
  IncidenceMatrix transposed() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

IncidenceMatrix incidence_matrix(const Hypergraph& h);

/// Sorts and deduplicates an id list in place; returns it for chaining.
std::vector<std::size_t> canonical_set(std::vector<std::size_t> ids);

}  // namespace hyperconn
