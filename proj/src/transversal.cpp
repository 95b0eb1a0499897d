#include "hyperconn/transversal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperconn {

namespace {

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    (*i < *j) ? ++i : ++j;
  }
  return true;
}

// Distinct supports of the nonempty edges, keeping only inclusion-minimal
// ones. `origin` receives the lowest edge id carrying each kept support.
std::vector<VertexSet> minimal_supports(const Hypergraph& h, std::vector<EdgeId>* origin = nullptr) {
  std::map<VertexSet, EdgeId> first;
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    if (!h.edges()[i].empty()) first.emplace(h.edges()[i].support(), i);
  }
  std::vector<std::pair<VertexSet, EdgeId>> all(first.begin(), first.end());
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.second < y.second; });

  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      dominated = j != i && all[j].first.size() < all[i].first.size() && subset_of(all[j].first, all[i].first);
    }
    if (dominated) continue;
    out.push_back(all[i].first);
    if (origin) origin->push_back(all[i].second);
  }
  return out;
}

VertexSet greedy_cover(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<char> covered(sets.size(), 0);
  VertexSet chosen;
  while (true) {
    std::vector<std::size_t> count(n, 0);
    bool any = false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (covered[i]) continue;
      any = true;
      for (VertexId v : sets[i]) ++count[v];
    }
    if (!any) break;
    VertexId best = static_cast<VertexId>(std::max_element(count.begin(), count.end()) - count.begin());
    chosen.push_back(best);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!covered[i] && std::binary_search(sets[i].begin(), sets[i].end(), best)) covered[i] = 1;
    }
  }
  return canonical_set(std::move(chosen));
}

class HittingSetSearch {
 public:
  HittingSetSearch(std::size_t n, std::vector<VertexSet> sets) : n_(n), sets_(std::move(sets)) {}

  VertexSet solve(VertexSet incumbent) {
    best_ = std::move(incumbent);
    chosen_.assign(n_, 0);
    forbidden_.assign(n_, 0);
    current_.clear();
    recurse();
    return canonical_set(best_);
  }

 private:
  bool hit(const VertexSet& s) const {
    return std::any_of(s.begin(), s.end(), [&](VertexId v) { return chosen_[v] != 0; });
  }

  void recurse() {
    // Uncovered sets restricted to still-allowed vertices.
    std::vector<VertexSet> open;
    for (const VertexSet& s : sets_) {
      if (hit(s)) continue;
      VertexSet allowed;
      for (VertexId v : s) {
        if (!forbidden_[v]) allowed.push_back(v);
      }
      if (allowed.empty()) return;  // cannot be hit any more
      open.push_back(std::move(allowed));
    }
    if (open.empty()) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    // Disjoint packing lower bound.
    std::vector<VertexSet> packing;
    for (const VertexSet& s : open) {
      if (std::all_of(packing.begin(), packing.end(), [&](const VertexSet& p) { return disjoint(p, s); })) {
        packing.push_back(s);
      }
    }
    if (current_.size() + packing.size() >= best_.size()) return;

    const VertexSet branch = *std::min_element(
        open.begin(), open.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    std::vector<VertexId> banned;
    for (VertexId v : branch) {
      chosen_[v] = 1;
      current_.push_back(v);
      recurse();
      current_.pop_back();
      chosen_[v] = 0;
      forbidden_[v] = 1;
      banned.push_back(v);
    }
    for (VertexId v : banned) forbidden_[v] = 0;
  }

  std::size_t n_;
  std::vector<VertexSet> sets_;
  std::vector<char> chosen_;
  std::vector<char> forbidden_;
  VertexSet current_;
  VertexSet best_;
};

class MatchingSearch {
 public:
  MatchingSearch(std::size_t n, std::vector<VertexSet> sets) : n_(n), sets_(std::move(sets)) {}

  std::vector<std::size_t> solve() {
    std::vector<char> alive(sets_.size(), 1);
    best_.clear();
    current_.clear();
    recurse(alive);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void recurse(const std::vector<char>& alive) {
    std::vector<VertexSet> rest;
    std::size_t alive_count = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (alive[i]) {
        rest.push_back(sets_[i]);
        ++alive_count;
      }
    }
    if (current_.size() > best_.size()) best_ = current_;
    if (alive_count == 0) return;
    if (current_.size() + alive_count <= best_.size()) return;
    if (current_.size() + greedy_cover(n_, rest).size() <= best_.size()) return;

    VertexId pivot = n_;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (alive[i]) pivot = std::min(pivot, sets_[i].front());
    }
    // Either some alive set through the pivot joins the matching...
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (!alive[i] || !std::binary_search(sets_[i].begin(), sets_[i].end(), pivot)) continue;
      std::vector<char> next = alive;
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (next[j] && !disjoint(sets_[i], sets_[j])) next[j] = 0;
      }
      current_.push_back(i);
      recurse(next);
      current_.pop_back();
    }
    // ...or the pivot stays unmatched.
    std::vector<char> next = alive;
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (next[j] && std::binary_search(sets_[j].begin(), sets_[j].end(), pivot)) next[j] = 0;
    }
    recurse(next);
  }

  std::size_t n_;
  std::vector<VertexSet> sets_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

TransversalResult tau(const Hypergraph& h) {
  std::vector<VertexSet> sets = minimal_supports(h);
  VertexSet forced;
  for (const VertexSet& s : sets) {
    if (s.size() == 1) forced.push_back(s.front());
  }
  forced = canonical_set(std::move(forced));

  std::vector<VertexSet> rest;
  for (const VertexSet& s : sets) {
    if (disjoint(s, forced)) rest.push_back(s);
  }
  HittingSetSearch search(h.num_vertices(), rest);
  VertexSet core = search.solve(greedy_cover(h.num_vertices(), rest));
  core.insert(core.end(), forced.begin(), forced.end());
  core = canonical_set(std::move(core));
  return {core.size(), core};
}

MatchingResult alpha(const Hypergraph& h) {
  std::vector<EdgeId> origin;
  std::vector<VertexSet> sets = minimal_supports(h, &origin);
  MatchingSearch search(h.num_vertices(), sets);
  EdgeSet witness;
  for (std::size_t i : search.solve()) witness.push_back(origin[i]);
  witness = canonical_set(std::move(witness));
  return {witness.size(), witness};
}

VertexSet greedy_transversal(const Hypergraph& h) {
  std::vector<VertexSet> sets;
  for (const Edge& e : h.edges()) {
    if (!e.empty()) sets.push_back(e.support());
  }
  return greedy_cover(h.num_vertices(), sets);
}

bool has_konig(const Hypergraph& h) { return alpha(h).alpha == tau(h).tau; }

bool is_transversal(const Hypergraph& h, std::span<const VertexId> candidate) {
  std::vector<char> in(h.num_vertices(), 0);
  for (VertexId v : candidate) {
    h.check_vertex(v);
    in[v] = 1;
  }
  for (const Edge& e : h.edges()) {
    if (e.empty()) continue;
    const auto& mult = e.multiplicities();
    if (std::none_of(mult.begin(), mult.end(), [&](const auto& entry) { return in[entry.first] != 0; })) {
      return false;
    }
  }
  return true;
}

bool is_matching(const Hypergraph& h, std::span<const EdgeId> candidate) {
  std::vector<char> used(h.num_vertices(), 0);
  std::set<EdgeId> seen;
  for (EdgeId id : candidate) {
    h.check_edge(id);
    if (!seen.insert(id).second) return false;
    const Edge& e = h.edges()[id];
    if (e.empty()) return false;
    for (const auto& [v, m] : e.multiplicities()) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

}  // namespace hyperconn
