#include "hyperconn/classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "combinations.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/transforms.hpp"

namespace hyperconn {

namespace {

class Counter {
 public:
  Counter(const char* name, std::size_t limit) : name_(name), limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExceeded(name_, limit_);
  }

 private:
  const char* name_;
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> up;
};

// Distinct supports with at least two members.
std::vector<VertexSet> proper_supports(const Hypergraph& h) {
  std::set<VertexSet> seen;
  std::vector<VertexSet> out;
  for (const Edge& e : h.edges()) {
    if (e.cardinality() < 2) continue;
    VertexSet s = e.support();
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

RepresentativeTree orient(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& links) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  RepresentativeTree tree{std::vector<VertexId>(n, n)};
  for (VertexId root = 0; root < n; ++root) {
    if (tree.parent[root] != n) continue;
    tree.parent[root] = root;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : adj[x]) {
        if (tree.parent[y] != n) continue;
        tree.parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  return tree;
}

bool edges_intersect(const Edge& a, const Edge& b) {
  for (const auto& [v, m] : a.multiplicities()) {
    if (b.contains(v)) return true;
  }
  return false;
}

bool common_vertex(const Hypergraph& h, const EdgeSet& family) {
  if (family.empty()) return true;
  for (const auto& [v, m] : h.edges()[family.front()].multiplicities()) {
    if (std::all_of(family.begin(), family.end(), [&](EdgeId e) { return h.edges()[e].contains(v); })) return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> RepresentativeTree::links() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId x = 0; x < parent.size(); ++x) {
    if (parent[x] != x) out.emplace_back(x, parent[x]);
  }
  return out;
}

std::vector<std::size_t> RepresentativeTree::degrees() const {
  std::vector<std::size_t> deg(parent.size(), 0);
  for (const auto& [a, b] : links()) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool verify_representative_tree(const Hypergraph& h, const RepresentativeTree& tree) {
  const std::size_t n = h.num_vertices();
  if (tree.parent.size() != n) throw InputError("tree does not cover the vertex set");
  for (VertexId x = 0; x < n; ++x) {
    if (tree.parent[x] >= n) throw InputError("tree parent out of range");
    // Walking up from x must reach a root within n steps.
    VertexId y = x;
    std::size_t steps = 0;
    while (tree.parent[y] != y) {
      y = tree.parent[y];
      if (++steps > n) throw InputError("tree parent array contains a cycle");
    }
  }
  std::vector<char> in(n, 0);
  for (const Edge& e : h.edges()) {
    if (e.empty()) continue;
    for (const auto& [v, m] : e.multiplicities()) in[v] = 1;
    std::size_t inside = 0;
    for (VertexId x = 0; x < n; ++x) {
      if (tree.parent[x] != x && in[x] && in[tree.parent[x]]) ++inside;
    }
    for (const auto& [v, m] : e.multiplicities()) in[v] = 0;
    if (inside + 1 != e.cardinality()) return false;
  }
  return true;
}

std::optional<RepresentativeTree> find_representative_tree(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::map<std::pair<VertexId, VertexId>, std::size_t> weight;
  for (const Edge& e : h.edges()) {
    const VertexSet s = e.support();
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) ++weight[{s[i], s[j]}];
    }
  }
  std::vector<std::pair<std::pair<VertexId, VertexId>, std::size_t>> order(weight.begin(), weight.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  DisjointSets sets(n);
  std::vector<std::pair<VertexId, VertexId>> links;
  for (const auto& [pair, w] : order) {
    if (sets.unite(pair.first, pair.second)) links.push_back(pair);
  }
  RepresentativeTree tree = orient(n, links);
  if (!verify_representative_tree(h, tree)) return std::nullopt;
  return tree;
}

std::optional<RepresentativeTree> find_representative_tree_exhaustive(const Hypergraph& h, std::size_t max_trees) {
  const std::size_t n = h.num_vertices();
  const auto labels = components(h);
  const auto all_links = two_section(h).links;
  Counter counter("trees", max_trees);

  std::vector<std::pair<VertexId, VertexId>> chosen_all;
  for (std::size_t comp = 0; comp < labels.count; ++comp) {
    std::vector<VertexId> members;
    for (VertexId x = 0; x < n; ++x) {
      if (labels.label[x] == comp) members.push_back(x);
    }
    std::vector<std::pair<VertexId, VertexId>> candidates;
    for (const auto& link : all_links) {
      if (!link.loop() && labels.label[link.a] == comp) candidates.emplace_back(link.a, link.b);
    }
    // The edges of this component only, as a standalone check.
    std::vector<Edge> local_edges;
    for (const Edge& e : h.edges()) {
      if (!e.empty() && labels.label[e.multiplicities().begin()->first] == comp) local_edges.push_back(e);
    }
    const Hypergraph local(n, local_edges);

    std::optional<std::vector<std::pair<VertexId, VertexId>>> found;
    std::vector<std::pair<VertexId, VertexId>> picked;
    // Include/exclude each candidate link; a complete pick of |members|-1
    // acyclic links is a spanning tree of the component.
    auto search = [&](auto&& self, std::size_t idx, DisjointSets sets) -> void {
      if (found) return;
      if (picked.size() + 1 == members.size()) {
        counter.tick();
        std::vector<std::pair<VertexId, VertexId>> links = picked;
        if (verify_representative_tree(local, orient(n, links))) found = links;
        return;
      }
      if (idx == candidates.size()) return;
      if (candidates.size() - idx < members.size() - 1 - picked.size()) return;
      const auto [a, b] = candidates[idx];
      if (sets.find(a) != sets.find(b)) {
        DisjointSets with = sets;
        with.unite(a, b);
        picked.emplace_back(a, b);
        self(self, idx + 1, with);
        picked.pop_back();
      }
      self(self, idx + 1, sets);
    };
    search(search, 0, DisjointSets(n));
    if (!found) return std::nullopt;
    chosen_all.insert(chosen_all.end(), found->begin(), found->end());
  }
  return orient(n, chosen_all);
}

ArborealReport is_arboreal(const Hypergraph& h) {
  if (auto tree = find_representative_tree(h)) return {Verdict::Yes, std::move(tree)};
  return {Verdict::No, std::nullopt};
}

BicolourReport is_bicolourable(const Hypergraph& h, const Budget& budget) {
  const std::size_t n = h.num_vertices();
  const auto sets = proper_supports(h);
  // Edges become checkable once their largest member is coloured.
  std::vector<std::vector<std::size_t>> closes_at(n);
  for (std::size_t i = 0; i < sets.size(); ++i) closes_at[sets[i].back()].push_back(i);

  std::vector<int> colour(n, -1);
  Counter counter("colourings", budget.colourings);
  auto search = [&](auto&& self, VertexId x) -> bool {
    if (x == n) return true;
    for (int c = 0; c < 2; ++c) {
      if (x == 0 && c == 1) break;  // colour symmetry
      counter.tick();
      colour[x] = c;
      const bool ok = std::none_of(closes_at[x].begin(), closes_at[x].end(), [&](std::size_t i) {
        return std::all_of(sets[i].begin(), sets[i].end(), [&](VertexId y) { return colour[y] == c; });
      });
      if (ok && self(self, x + 1)) return true;
    }
    colour[x] = -1;
    return false;
  };
  try {
    if (search(search, 0)) return {Verdict::Yes, colour};
    return {Verdict::No, {}};
  } catch (const BudgetExceeded&) {
    return {Verdict::Unknown, {}};
  }
}

HellyReport is_helly(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  HellyReport report{Verdict::Yes, {}, {}};
  detail::for_each_combination(pool, 3, [&](const std::vector<VertexId>& triple) {
    EdgeSet family;
    for (EdgeId i = 0; i < h.num_edges(); ++i) {
      const Edge& e = h.edges()[i];
      const int hits = e.contains(triple[0]) + e.contains(triple[1]) + e.contains(triple[2]);
      if (hits >= 2) family.push_back(i);
    }
    if (common_vertex(h, family)) return false;
    report = {Verdict::No, triple, family};
    return true;
  });
  return report;
}

bool is_helly_exhaustive(const Hypergraph& h) {
  EdgeSet nonempty;
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    if (!h.edges()[i].empty()) nonempty.push_back(i);
  }
  if (nonempty.size() > 20) throw InputError("exhaustive Helly check limited to 20 nonempty edges");
  const std::size_t m = nonempty.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    EdgeSet family;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) family.push_back(nonempty[i]);
    }
    bool pairwise = true;
    for (std::size_t a = 0; a < family.size() && pairwise; ++a) {
      for (std::size_t b = a + 1; b < family.size() && pairwise; ++b) {
        pairwise = edges_intersect(h.edges()[family[a]], h.edges()[family[b]]);
      }
    }
    if (pairwise && !common_vertex(h, family)) return false;
  }
  return true;
}

TotallyBalancedReport is_totally_balanced(const Hypergraph& h, const Budget& budget) {
  const Hypergraph norm = normalize(h);
  const std::size_t n = norm.num_vertices();
  const auto inc = incident_edges(norm);
  Counter counter("cycles", budget.cycles);

  std::vector<char> on_path(n, 0);
  std::vector<char> edge_used(norm.num_edges(), 0);
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;
  std::optional<HyperCycle> violation;

  auto count_on_path = [&](EdgeId e) {
    std::size_t c = 0;
    for (const auto& [v, m] : norm.edges()[e].multiplicities()) c += on_path[v];
    return c;
  };
  // Some edge already holds three path vertices: every cycle closing this
  // path is balanced, so the branch can be dropped.
  auto saturated = [&]() {
    return std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return count_on_path(e) >= 3; });
  };

  auto search = [&](auto&& self, VertexId start, VertexId x) -> void {
    if (violation) return;
    counter.tick();
    for (EdgeId e : inc[x]) {
      if (edge_used[e]) continue;
      // Close the cycle through e when it reaches back to start.
      if (verts.size() >= 3 && norm.edges()[e].contains(start) && count_on_path(e) < 3) {
        violation = HyperCycle{verts, edges};
        violation->edges.push_back(e);
        return;
      }
      edge_used[e] = 1;
      edges.push_back(e);
      for (const auto& [y, m] : norm.edges()[e].multiplicities()) {
        if (y <= start || on_path[y]) continue;
        on_path[y] = 1;
        verts.push_back(y);
        if (!saturated()) self(self, start, y);
        verts.pop_back();
        on_path[y] = 0;
        if (violation) return;
      }
      edges.pop_back();
      edge_used[e] = 0;
    }
  };

  try {
    for (VertexId start = 0; start < n && !violation; ++start) {
      on_path[start] = 1;
      verts = {start};
      search(search, start, start);
      on_path[start] = 0;
      edges.clear();
      std::fill(edge_used.begin(), edge_used.end(), 0);
    }
  } catch (const BudgetExceeded&) {
    return {Verdict::Unknown, std::nullopt};
  }
  if (!violation) return {Verdict::Yes, std::nullopt};

  // Report edge ids in the caller's numbering: map each normalized edge to
  // the first original edge with the same support.
  HyperCycle cycle = *violation;
  for (EdgeId& e : cycle.edges) {
    const VertexSet target = norm.edges()[e].support();
    for (EdgeId i = 0; i < h.num_edges(); ++i) {
      if (h.edges()[i].support() == target) {
        e = i;
        break;
      }
    }
  }
  return {Verdict::No, cycle};
}

IntervalReport is_interval(const Hypergraph& h, const Budget& budget) {
  const std::size_t n = h.num_vertices();
  const auto sets = proper_supports(h);
  std::vector<std::vector<std::size_t>> member_of(n);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (VertexId v : sets[i]) member_of[v].push_back(i);
  }
  std::vector<std::size_t> placed_count(sets.size(), 0);
  std::vector<char> placed(n, 0);
  std::vector<VertexId> order;
  Counter counter("orderings", budget.orderings);

  // While an edge is partially placed, only its members may come next.
  auto allowed = [&](VertexId y) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (placed_count[i] > 0 && placed_count[i] < sets[i].size() &&
          !std::binary_search(sets[i].begin(), sets[i].end(), y)) {
        return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self) -> bool {
    if (order.size() == n) return true;
    for (VertexId y = 0; y < n; ++y) {
      if (placed[y] || !allowed(y)) continue;
      counter.tick();
      placed[y] = 1;
      order.push_back(y);
      for (std::size_t i : member_of[y]) ++placed_count[i];
      if (self(self)) return true;
      for (std::size_t i : member_of[y]) --placed_count[i];
      order.pop_back();
      placed[y] = 0;
    }
    return false;
  };
  try {
    if (search(search)) return {Verdict::Yes, order};
    return {Verdict::No, {}};
  } catch (const BudgetExceeded&) {
    return {Verdict::Unknown, {}};
  }
}

KonigReport konig_report(const Hypergraph& h) {
  KonigReport report;
  report.matching = alpha(h);
  report.transversal = tau(h);
  report.verdict = report.matching.alpha == report.transversal.tau ? Verdict::Yes : Verdict::No;
  return report;
}

ClassReport classify(const Hypergraph& h, const Budget& budget) {
  ClassReport report;
  report.arboreal = is_arboreal(h);
  report.bicolourable = is_bicolourable(h, budget);
  report.helly = is_helly(h);
  report.totally_balanced = is_totally_balanced(h, budget);
  report.interval = is_interval(h, budget);
  report.konig = konig_report(h);
  return report;
}

bool verify_bicolouring(const Hypergraph& h, const std::vector<int>& colouring) {
  if (colouring.size() != h.num_vertices()) return false;
  if (std::any_of(colouring.begin(), colouring.end(), [](int c) { return c != 0 && c != 1; })) return false;
  for (const Edge& e : h.edges()) {
    if (e.cardinality() < 2) continue;
    std::set<int> seen;
    for (const auto& [v, m] : e.multiplicities()) seen.insert(colouring[v]);
    if (seen.size() < 2) return false;
  }
  return true;
}

bool verify_helly_violation(const Hypergraph& h, const EdgeSet& family) {
  for (EdgeId e : family) {
    if (e >= h.num_edges() || h.edges()[e].empty()) return false;
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (!edges_intersect(h.edges()[family[a]], h.edges()[family[b]])) return false;
    }
  }
  return !family.empty() && !common_vertex(h, family);
}

bool verify_violating_cycle(const Hypergraph& h, const HyperCycle& cycle) {
  const std::size_t s = cycle.vertices.size();
  if (s < 3 || cycle.edges.size() != s) return false;
  std::set<VertexId> vs(cycle.vertices.begin(), cycle.vertices.end());
  std::set<EdgeId> es(cycle.edges.begin(), cycle.edges.end());
  if (vs.size() != s || es.size() != s) return false;
  for (std::size_t j = 0; j < s; ++j) {
    if (cycle.edges[j] >= h.num_edges()) return false;
    const Edge& e = h.edges()[cycle.edges[j]];
    if (!e.contains(cycle.vertices[j]) || !e.contains(cycle.vertices[(j + 1) % s])) return false;
  }
  for (EdgeId id : cycle.edges) {
    std::size_t inside = 0;
    for (VertexId v : cycle.vertices) inside += h.edges()[id].contains(v);
    if (inside >= 3) return false;
  }
  return true;
}

bool verify_interval_ordering(const Hypergraph& h, const std::vector<VertexId>& ordering) {
  const std::size_t n = h.num_vertices();
  if (ordering.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ordering[i] >= n || pos[ordering[i]] != n) return false;
    pos[ordering[i]] = i;
  }
  for (const Edge& e : h.edges()) {
    if (e.empty()) continue;
    std::size_t lo = n;
    std::size_t hi = 0;
    for (const auto& [v, m] : e.multiplicities()) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    if (hi - lo + 1 != e.cardinality()) return false;
  }
  return true;
}

}  // namespace hyperconn
