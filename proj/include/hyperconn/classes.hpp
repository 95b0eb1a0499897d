#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperconn/budget.hpp"
#include "hyperconn/core.hpp"
#include "hyperconn/transversal.hpp"

namespace hyperconn {

/// Forest on V stored as a parent array; roots point to themselves.
struct RepresentativeTree {
  std::vector<VertexId> parent;

  /// (child, parent) links.
  std::vector<std::pair<VertexId, VertexId>> links() const;
  std::vector<std::size_t> degrees() const;
};

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict verdict);

struct ArborealReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<RepresentativeTree> tree;
};

struct BicolourReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<int> colouring;  // 0/1 per vertex when Yes
};

struct HellyReport {
  Verdict verdict = Verdict::Unknown;
  VertexSet triple;  // when No: three vertices whose pair-covering edges
  EdgeSet family;    // pairwise intersect without a common vertex
};

struct HyperCycle {
  std::vector<VertexId> vertices;  // v_1..v_s (v_{s+1} = v_1 implied)
  std::vector<EdgeId> edges;       // e_j joins vertices[j] and vertices[(j+1) % s]
};

struct TotallyBalancedReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<HyperCycle> violating_cycle;
};

struct IntervalReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<VertexId> ordering;
};

struct KonigReport {
  Verdict verdict = Verdict::Unknown;
  MatchingResult matching;
  TransversalResult transversal;
};

struct ClassReport {
  ArborealReport arboreal;
  BicolourReport bicolourable;
  HellyReport helly;
  TotallyBalancedReport totally_balanced;
  IntervalReport interval;
  KonigReport konig;
  /// Recognition of normal hypergraphs is not attempted.
  Verdict normal = Verdict::Unknown;
};

/// True iff every edge's support induces a connected subgraph of `tree`.
/// Throws InputError when `tree` is not a forest on V.
bool verify_representative_tree(const Hypergraph& h, const RepresentativeTree& tree);

/// Maximum-weight spanning forest of the 2-section, weighting {a,b} by the
/// number of edges containing both. A forest has weight sum(|supp e| - 1)
/// exactly when it is representative, and no forest weighs more, so the
/// result is representative iff h is arboreal.
std::optional<RepresentativeTree> find_representative_tree(const Hypergraph& h);

/// Tries every spanning tree of each component's 2-section. Throws
/// BudgetExceeded after `max_trees` trees.
std::optional<RepresentativeTree> find_representative_tree_exhaustive(const Hypergraph& h,
                                                                     std::size_t max_trees = Budget{}.trees);

ArborealReport is_arboreal(const Hypergraph& h);
BicolourReport is_bicolourable(const Hypergraph& h, const Budget& budget = {});
/// Berge's triple criterion; empty edges are ignored.
HellyReport is_helly(const Hypergraph& h);
/// Checks every pairwise-intersecting subfamily of nonempty edges directly.
/// Throws InputError for more than 20 nonempty edges.
bool is_helly_exhaustive(const Hypergraph& h);
TotallyBalancedReport is_totally_balanced(const Hypergraph& h, const Budget& budget = {});
IntervalReport is_interval(const Hypergraph& h, const Budget& budget = {});
KonigReport konig_report(const Hypergraph& h);

ClassReport classify(const Hypergraph& h, const Budget& budget = {});

// Witness verifiers.
bool verify_bicolouring(const Hypergraph& h, const std::vector<int>& colouring);
bool verify_helly_violation(const Hypergraph& h, const EdgeSet& family);
bool verify_violating_cycle(const Hypergraph& h, const HyperCycle& cycle);
bool verify_interval_ordering(const Hypergraph& h, const std::vector<VertexId>& ordering);

}  // namespace hyperconn
