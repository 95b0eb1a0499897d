#include "hyperconn/weakflow.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>

#include "hyperconn/connectivity.hpp"
#include "hyperconn/transforms.hpp"

namespace hyperconn {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_pair(const Hypergraph& h, VertexId u, VertexId v) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) throw InputError("pair endpoints must differ");
}

void finish_infinity(FlowNetwork& net) {
  const std::size_t units = net.unit_arc_count();
  net.infinity = units + 1;
  for (auto& arc : net.arcs) {
    if (arc.capacity == kNone) arc.capacity = net.infinity;
  }
}

// Pairs to evaluate for a global vertex connectivity search.
std::vector<std::pair<VertexId, VertexId>> candidate_pairs(const std::vector<std::vector<VertexId>>& adj,
                                                           PairSearch mode) {
  const std::size_t n = adj.size();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto adjacent = [&](VertexId a, VertexId b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  if (mode == PairSearch::AllPairs) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!adjacent(a, b)) pairs.emplace_back(a, b);
      }
    }
    return pairs;
  }
  VertexId pivot = 0;
  for (VertexId x = 1; x < n; ++x) {
    if (adj[x].size() < adj[pivot].size()) pivot = x;
  }
  for (VertexId w = 0; w < n; ++w) {
    if (w != pivot && !adjacent(pivot, w)) pairs.emplace_back(std::min(pivot, w), std::max(pivot, w));
  }
  const auto& nbrs = adj[pivot];
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!adjacent(nbrs[i], nbrs[j])) pairs.emplace_back(nbrs[i], nbrs[j]);
    }
  }
  return pairs;
}

}  // namespace

std::size_t FlowNetwork::unit_arc_count() const {
  return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [this](const Arc& a) {
    return nodes[a.from].kind == NodeKind::VertexIn || nodes[a.from].kind == NodeKind::EdgeIn;
  }));
}

FlowNetwork build_vertex_split_network(const Hypergraph& h, VertexId u, VertexId v) {
  require_pair(h, u, v);
  FlowNetwork net;
  std::vector<std::size_t> in(h.num_vertices(), kNone);
  std::vector<std::size_t> out(h.num_vertices(), kNone);
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    if (x != u) {
      in[x] = net.nodes.size();
      net.nodes.push_back({FlowNetwork::NodeKind::VertexIn, x});
    }
    if (x != v) {
      out[x] = net.nodes.size();
      net.nodes.push_back({FlowNetwork::NodeKind::VertexOut, x});
    }
    if (x != u && x != v) net.arcs.push_back({in[x], out[x], 1});
  }
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edges()[i];
    if (e.empty()) continue;
    const std::size_t node = net.nodes.size();
    net.nodes.push_back({FlowNetwork::NodeKind::EdgeNode, i});
    for (const auto& [x, m] : e.multiplicities()) {
      if (x != v) net.arcs.push_back({out[x], node, kNone});
      if (x != u) net.arcs.push_back({node, in[x], kNone});
    }
  }
  net.source = out[u];
  net.sink = in[v];
  finish_infinity(net);
  return net;
}

FlowNetwork build_edge_split_network(const Hypergraph& h, VertexId u, VertexId v) {
  require_pair(h, u, v);
  FlowNetwork net;
  for (VertexId x = 0; x < h.num_vertices(); ++x) net.nodes.push_back({FlowNetwork::NodeKind::Vertex, x});
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edges()[i];
    if (e.empty()) continue;
    const std::size_t in = net.nodes.size();
    net.nodes.push_back({FlowNetwork::NodeKind::EdgeIn, i});
    const std::size_t out = net.nodes.size();
    net.nodes.push_back({FlowNetwork::NodeKind::EdgeOut, i});
    net.arcs.push_back({in, out, 1});
    for (const auto& [x, m] : e.multiplicities()) {
      net.arcs.push_back({x, in, kNone});
      net.arcs.push_back({out, x, kNone});
    }
  }
  net.source = u;
  net.sink = v;
  finish_infinity(net);
  return net;
}

MaxFlowResult max_flow_min_cut(const FlowNetwork& net) {
  // Residual arcs: 2i is arc i forward, 2i+1 its reverse.
  const std::size_t nodes = net.nodes.size();
  std::vector<std::vector<std::size_t>> out(nodes);
  std::vector<std::size_t> residual(2 * net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    residual[2 * i] = net.arcs[i].capacity;
    residual[2 * i + 1] = 0;
    out[net.arcs[i].from].push_back(2 * i);
    out[net.arcs[i].to].push_back(2 * i + 1);
  }
  auto head = [&](std::size_t r) { return r % 2 == 0 ? net.arcs[r / 2].to : net.arcs[r / 2].from; };

  MaxFlowResult result;
  std::vector<std::size_t> via(nodes);
  while (result.value < net.infinity) {
    std::fill(via.begin(), via.end(), kNone);
    via[net.source] = kNone - 1;
    std::deque<std::size_t> queue{net.source};
    while (!queue.empty() && via[net.sink] == kNone) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t r : out[x]) {
        std::size_t y = head(r);
        if (residual[r] == 0 || via[y] != kNone) continue;
        via[y] = r;
        queue.push_back(y);
      }
    }
    if (via[net.sink] == kNone) break;

    std::size_t bottleneck = net.infinity - result.value;
    for (std::size_t y = net.sink; y != net.source; y = head(via[y] ^ 1)) {
      bottleneck = std::min(bottleneck, residual[via[y]]);
    }
    for (std::size_t y = net.sink; y != net.source; y = head(via[y] ^ 1)) {
      residual[via[y]] -= bottleneck;
      residual[via[y] ^ 1] += bottleneck;
    }
    result.value += bottleneck;
  }

  result.source_side.assign(nodes, 0);
  result.source_side[net.source] = 1;
  std::deque<std::size_t> queue{net.source};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t r : out[x]) {
      std::size_t y = head(r);
      if (residual[r] == 0 || result.source_side[y]) continue;
      result.source_side[y] = 1;
      queue.push_back(y);
    }
  }
  result.arc_flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) result.arc_flow[i] = residual[2 * i + 1];
  return result;
}

std::vector<std::vector<std::size_t>> decompose_flow(const FlowNetwork& net, const MaxFlowResult& flow) {
  std::vector<std::size_t> remaining = flow.arc_flow;
  std::vector<std::vector<std::size_t>> out_arcs(net.nodes.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) out_arcs[net.arcs[i].from].push_back(i);

  std::vector<std::vector<std::size_t>> paths;
  for (std::size_t unit = 0; unit < flow.value; ++unit) {
    std::vector<std::size_t> path{net.source};
    std::vector<char> on_path(net.nodes.size(), 0);
    on_path[net.source] = 1;
    std::size_t x = net.source;
    while (x != net.sink) {
      auto it = std::find_if(out_arcs[x].begin(), out_arcs[x].end(),
                             [&](std::size_t a) { return remaining[a] > 0; });
      if (it == out_arcs[x].end()) return paths;  // not a valid flow
      --remaining[*it];
      x = net.arcs[*it].to;
      if (on_path[x]) {
        // Cancel a circulation: drop the loop from the path.
        while (path.back() != x) {
          on_path[path.back()] = 0;
          path.pop_back();
        }
        continue;
      }
      on_path[x] = 1;
      path.push_back(x);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

CutResult kappa_w_pair(const Hypergraph& h, VertexId u, VertexId v) {
  require_pair(h, u, v);
  const Hypergraph norm = normalize(h);
  const FlowNetwork net = build_vertex_split_network(norm, u, v);
  const MaxFlowResult flow = max_flow_min_cut(net);
  if (flow.infinite(net)) return {h.num_vertices() - 1, {}, false};

  CutResult out{flow.value, {}, true};
  for (const auto& arc : net.arcs) {
    if (net.nodes[arc.from].kind == FlowNetwork::NodeKind::VertexIn && flow.source_side[arc.from] &&
        !flow.source_side[arc.to]) {
      out.witness.push_back(net.nodes[arc.from].ref);
    }
  }
  out.witness = canonical_set(std::move(out.witness));
  assert(out.witness.size() == out.value);
  return out;
}

CutResult kappa_w(const Hypergraph& h, PairSearch mode) {
  const std::size_t n = h.num_vertices();
  if (n <= 1) return {1, {}, false};
  if (!is_connected(h)) return {0, {}, true};

  const Hypergraph norm = normalize(h);
  const auto adj = two_section(norm).adjacency();
  CutResult best{n - 1, {}, false};
  for (const auto& [a, b] : candidate_pairs(adj, mode)) {
    CutResult pair = kappa_w_pair(norm, a, b);
    if (pair.attained && (!best.attained || pair.value < best.value)) best = std::move(pair);
  }

#ifndef NDEBUG
  if (mode == PairSearch::Reduced) {
    // kappa_W(H) = kappa([H]_2): rerun over the 2-section viewed as a graph.
    std::vector<std::vector<VertexId>> links;
    for (const auto& link : two_section(norm).links) {
      if (!link.loop()) links.push_back({link.a, link.b});
    }
    const CutResult graph_cut = kappa_w(Hypergraph::from_lists(n, links), PairSearch::AllPairs);
    assert(graph_cut.value == best.value);
  }
#endif
  return best;
}

EdgeSet boundary(const Hypergraph& h, std::span<const VertexId> side) {
  std::vector<char> in_side(h.num_vertices(), 0);
  std::size_t count = 0;
  for (VertexId v : side) {
    h.check_vertex(v);
    if (!in_side[v]) ++count;
    in_side[v] = 1;
  }
  if (count == 0 || count == h.num_vertices()) {
    throw InputError("boundary requires a proper nonempty vertex subset");
  }
  EdgeSet out;
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    bool inside = false;
    bool outside = false;
    for (const auto& [v, m] : h.edges()[i].multiplicities()) (in_side[v] ? inside : outside) = true;
    if (inside && outside) out.push_back(i);
  }
  return out;
}

CutResult kappa_w_edge_pair(const Hypergraph& h, VertexId u, VertexId v) {
  require_pair(h, u, v);
  const FlowNetwork net = build_edge_split_network(h, u, v);
  const MaxFlowResult flow = max_flow_min_cut(net);
  CutResult out{flow.value, {}, true};
  for (const auto& arc : net.arcs) {
    if (net.nodes[arc.from].kind == FlowNetwork::NodeKind::EdgeIn && flow.source_side[arc.from] &&
        !flow.source_side[arc.to]) {
      out.witness.push_back(net.nodes[arc.from].ref);
    }
  }
  out.witness = canonical_set(std::move(out.witness));
  assert(out.witness.size() == out.value);
  return out;
}

CutResult kappa_w_edge(const Hypergraph& h, PairSearch mode) {
  const std::size_t n = h.num_vertices();
  if (n <= 1) return {1, {}, false};
  if (!is_connected(h)) return {0, {}, true};

  // Some minimum cut separates vertex 0 from another vertex, so pairing 0
  // with everything else suffices.
  std::optional<CutResult> best;
  for (VertexId a = 0; a < (mode == PairSearch::AllPairs ? n : 1); ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      CutResult pair = kappa_w_edge_pair(h, a, b);
      if (!best || pair.value < best->value) best = std::move(pair);
    }
  }
  return *best;
}

}  // namespace hyperconn
