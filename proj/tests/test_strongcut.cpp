#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/strongcut.hpp"
#include "hyperconn/transversal.hpp"
#include "hyperconn/verify.hpp"
#include "hyperconn/weakflow.hpp"
#include "oracles.hpp"

using namespace hyperconn;
using testing_support::H;
using testing_support::random_instance;

namespace {

StrongOptions plain_enumeration() {
  StrongOptions o;
  o.fast_paths = false;
  o.bound_pruning = false;
  return o;
}

bool adjacent(const Hypergraph& norm, VertexId u, VertexId v) {
  const VertexSet both{std::min(u, v), std::max(u, v)};
  return std::any_of(norm.edges().begin(), norm.edges().end(), [&](const Edge& e) { return e.support() == both; });
}

}  // namespace

TEST_SUITE("strongcut") {
  TEST_CASE("kappa_s on the named instances") {
    const StrongCutResult f1 = kappa_s(fig1_disjoint_cuts());
    CHECK(f1.value == 1);
    CHECK(f1.witness == VertexSet{8});
    for (std::size_t n = 2; n <= 6; ++n) {
      const StrongCutResult r = kappa_s(fig2_gap(n));
      CHECK(r.value == 1);
      CHECK(r.witness == VertexSet{2 * n});
    }
    const StrongCutResult fd = kappa_s(fano_doubled());
    CHECK(fd.value == 3);
    CHECK(verify_strong_vertex_cut(fano_doubled(), fd.witness));
    const StrongCutResult k4 = kappa_s(H(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(k4.value == 3);
    CHECK_FALSE(k4.attained);
    CHECK(k4.method == StrongMethod::EdgeSize2);
  }

  TEST_CASE("kappa_s conventions and methods") {
    CHECK_FALSE(kappa_s(Hypergraph{}).attained);
    CHECK(kappa_s(H(1, {})).value == 1);
    const StrongCutResult d = kappa_s(H(3, {{0, 1}}));
    CHECK(d.value == 0);
    CHECK(d.attained);
    CHECK(kappa_s(two_books()).method == StrongMethod::Arboreal);
    CHECK(kappa_s(fano_doubled()).method == StrongMethod::Enumeration);
    CHECK(to_string(StrongMethod::EdgeSize2) == "EDGE_SIZE_2");
  }

  TEST_CASE("minimum strong vertex cuts of the disjoint-cuts instance") {
    CHECK(minimum_strong_vertex_cuts(fig1_disjoint_cuts()) == std::vector<VertexSet>{{8}});
    // Minimum weak cuts are {x1,x2} and {y1,y2}; none meets {z}.
    const CutResult w = kappa_w(fig1_disjoint_cuts());
    CHECK(std::find(w.witness.begin(), w.witness.end(), 8) == w.witness.end());
  }

  TEST_CASE("kappa_s_pair") {
    const StrongCutResult r = kappa_s_pair(fig1_disjoint_cuts(), 2, 6);
    CHECK(r.value == 1);
    CHECK(r.witness == VertexSet{8});
    const StrongCutResult adj = kappa_s_pair(H(2, {{0, 1}}), 0, 1);
    CHECK(adj.value == 1);
    CHECK_FALSE(adj.attained);
    const ReductionInstance k2 = vc_reduction(Graph{2, {{0, 1}}});
    CHECK(kappa_s_pair(k2.hypergraph, k2.a_u[0], k2.a_v[0]).value == 1);
    CHECK_THROWS_AS(kappa_s_pair(fano(), 1, 1), InputError);
  }

  TEST_CASE("path_support_hypergraph") {
    CHECK(path_support_hypergraph(H(3, {{0, 1}, {1, 2}}), 0, 2) == H(1, {{0}}));
    CHECK(path_support_hypergraph(H(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}}), 0, 2) == H(2, {{0}, {1}}));
    const Hypergraph f1 = path_support_hypergraph(fig1_disjoint_cuts(), 2, 6);
    // z is the 7th vertex of V \ {x3, y3}.
    CHECK(f1.num_edges() > 0);
    for (const Edge& e : f1.edges()) CHECK(e.contains(6));
    CHECK(tau(f1).tau == 1);
    CHECK_THROWS_AS(path_support_hypergraph(fig1_disjoint_cuts(), 2, 6, 3), BudgetExceeded);
  }

  TEST_CASE("kappa_s_edge") {
    const StrongCutResult fd = kappa_s_edge(fano_doubled());
    CHECK(fd.value == 1);
    CHECK(fd.witness == EdgeSet{0});
    // Either single strong edge deletion leaves one vertex; deleting both leaves none.
    const StrongCutResult p = kappa_s_edge(H(3, {{0, 1}, {1, 2}}));
    CHECK(p.value == 2);
    CHECK_FALSE(p.attained);
    const Hypergraph no_cross = H(9, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                      {0, 4, 8}, {1, 5, 8}});
    CHECK(kappa_s(no_cross).value == 1);
    CHECK(kappa_s_edge(no_cross).value == 2);
    CHECK(kappa_s_edge(H(1, {})).value == 1);
  }

  TEST_CASE("kappa_s_edge_pair") {
    const Hypergraph h = fano_doubled();
    const StrongCutResult r = kappa_s_edge_pair(h, 3, 7);
    CHECK(r.value == 1);
    CHECK(verify_strong_pair_disconnecting_set(h, 3, 7, r.witness));
    for (EdgeId e : r.witness) {
      CHECK_FALSE(h.edge(e).contains(3));
      CHECK_FALSE(h.edge(e).contains(7));
    }
  }

  TEST_CASE("strong results match brute force") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      const Hypergraph h = random_instance(seed, 8, 9, 4);
      const StrongCutResult s = kappa_s(h);
      const auto os = oracle::kappa_s(h);
      CHECK(s.value == os.value);
      CHECK(s.attained == os.attained);
      if (s.attained) CHECK(verify_strong_vertex_cut(h, s.witness));
      // Fast paths, bound pruning and plain enumeration agree.
      CHECK(kappa_s(h, plain_enumeration()).value == s.value);

      if (h.num_edges() <= 10) {
        const StrongCutResult se = kappa_s_edge(h);
        const auto ose = oracle::kappa_s_edge(h);
        CHECK(se.value == ose.value);
        CHECK(se.attained == ose.attained);
        if (se.attained) CHECK(verify_strong_disconnecting_set(h, se.witness));
      }
    }
  }

  TEST_CASE("pairwise strong values") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Hypergraph h = random_instance(seed, 7, 8, 3);
      const Hypergraph norm = normalize(h);
      std::size_t best = h.num_vertices() >= 2 ? h.num_vertices() - 1 : 1;
      for (VertexId u = 0; u < h.num_vertices(); ++u) {
        for (VertexId v = u + 1; v < h.num_vertices(); ++v) {
          const StrongCutResult r = kappa_s_pair(h, u, v);
          const auto o = oracle::kappa_vertex_pair(norm, u, v, true);
          CHECK(r.value == o.value);
          CHECK(r.attained == o.attained);
          CHECK(r.attained == !adjacent(norm, u, v));
          if (r.attained) CHECK(verify_strong_pair_cut(h, u, v, r.witness));
          best = std::min(best, r.value);
          if (h.num_edges() <= 8) {
            const StrongCutResult e = kappa_s_edge_pair(h, u, v);
            CHECK(e.value == oracle::kappa_edge_pair(h, u, v, true).value);
          }
        }
      }
      if (h.num_vertices() >= 2 && is_connected(h)) CHECK(kappa_s(h).value == best);
    }
  }

  TEST_CASE("enumeration budget") {
    StrongOptions tight = plain_enumeration();
    tight.budget.subsets = 5;
    CHECK_THROWS_AS(kappa_s(fano_doubled(), tight), BudgetExceeded);
    // kappa'_S of fano_doubled is 1; a 6-cycle needs 2.
    const Hypergraph c6 = H(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK_THROWS_AS(kappa_s_edge(c6, tight), BudgetExceeded);
    CHECK(kappa_s_edge(c6).value == 2);
  }
}
