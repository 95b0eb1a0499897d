#include <doctest.h>

#include "helpers.hpp"
#include "hyperconn/classes.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/hgr.hpp"
#include "hyperconn/strongcut.hpp"
#include "hyperconn/transversal.hpp"
#include "hyperconn/weakflow.hpp"
#include "oracles.hpp"

using namespace hyperconn;
using testing_support::H;
using testing_support::random_instance;

TEST_SUITE("generators") {
  TEST_CASE("shapes") {
    CHECK(fig1_disjoint_cuts().num_vertices() == 9);
    CHECK(fig1_disjoint_cuts().num_edges() == 14);
    CHECK(fig2_gap(4).num_vertices() == 9);
    CHECK(fig2_gap(4).num_edges() == 6);
    CHECK_THROWS_AS(fig2_gap(1), InputError);
    CHECK(fig3_chain().num_edges() == 3);
    CHECK(is_connected(fig3_chain()));
    CHECK(two_books().num_edges() == 6);
    CHECK(fano_doubled().num_vertices() == 11);
    CHECK(fano_doubled().num_edges() == 13);
  }

  TEST_CASE("fig2 gap between strong and weak connectivity") {
    CHECK(kappa_w(fig2_gap(2)).value - kappa_s(fig2_gap(2)).value == 2);
    CHECK(kappa_w(fig2_gap(5)).value == 6);
  }

  TEST_CASE("two books") {
    CHECK(kappa_w(two_books()).value == 1);
    CHECK(kappa_w_edge(two_books()).value == 2);
    CHECK(strong_cut_vertices(two_books()) == VertexSet{6});
  }

  TEST_CASE("vertex-cover reduction") {
    const ReductionInstance r = vc_reduction(Graph{2, {{0, 1}}});
    CHECK(r.a_u == VertexSet{2, 3});
    CHECK(r.a_v == VertexSet{4, 5});
    CHECK(r.v_g == VertexSet{0, 1});
    CHECK(r.hypergraph.num_edges() == 4 + 2);
    CHECK(kappa_s(r.hypergraph).value == 1);
    CHECK(kappa_s(vc_reduction(Graph{3, {{0, 1}, {1, 2}, {0, 2}}}).hypergraph).value == 2);
    CHECK(kappa_s(vc_reduction(Graph{4, {{0, 1}, {1, 2}, {2, 3}}}).hypergraph).value == 2);
    CHECK_THROWS_AS(vc_reduction(Graph{3, {}}), InputError);
    CHECK_THROWS_AS(vc_reduction(Graph{2, {{0, 1}, {1, 0}}}), InputError);
    CHECK_THROWS_AS(vc_reduction(Graph{2, {{1, 1}}}), InputError);
  }

  TEST_CASE("reduction instances are bicolourable with the konig property") {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const auto& links : oracle::nonisomorphic_graphs(n)) {
        Graph g{n, {}};
        for (auto [a, b] : links) g.links.push_back({a, b});
        const ReductionInstance r = vc_reduction(g);
        CHECK(max_edge_size(r.hypergraph) <= 3);
        CHECK(has_konig(r.hypergraph));
        CHECK(tau(r.hypergraph).tau <= n);
        // A_u and A_v take one colour, V_G the other.
        std::vector<int> colouring(3 * n, 0);
        for (VertexId x : r.v_g) colouring[x] = 1;
        CHECK(verify_bicolouring(r.hypergraph, colouring));
      }
    }
  }

  TEST_CASE("umlaut") {
    const Hypergraph h = fano();
    const Hypergraph u = umlaut(h);
    CHECK(u.num_vertices() == 9);
    CHECK(u.num_edges() == 9);
    CHECK(is_connected(u));
    const StrongCutResult r = kappa_s(u);
    CHECK(r.value == 1);
    CHECK(tau(u).tau == tau(h).tau + 1);
    CHECK_THROWS_AS(umlaut(Hypergraph{}), InputError);
    CHECK(minimum_strong_vertex_cuts(umlaut(H(1, {}))).front() == VertexSet{1});
  }

  TEST_CASE("random generator") {
    CHECK(random_hypergraph(0, 0, 3, 5) == Hypergraph{});
    CHECK(random_hypergraph(8, 10, 3, 9) == random_hypergraph(8, 10, 3, 9));
    CHECK_THROWS_AS(random_hypergraph(3, 2, 0, 1), InputError);
    CHECK_THROWS_AS(random_hypergraph(0, 2, 3, 1), InputError);
    // Frozen at first generation.
    CHECK(serialize_hgr(random_hypergraph(8, 10, 3, 42)) ==
          "p hgr 8 10\n1 7\n6 8\n1 6\n2 3 4\n5 6\n3 7\n2 4 6\n1 3 6\n6 7\n3 6 8\n");
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Hypergraph h = random_hypergraph(6, 8, 4, seed);
      for (const Edge& e : h.edges()) {
        CHECK(e.cardinality() >= 2);
        CHECK(e.cardinality() <= 4);
        CHECK(e.size() == e.cardinality());
      }
    }
  }

  TEST_CASE("uniform_int stays in range and is portable") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
      const auto x = uniform_int(rng, 3, 9);
      CHECK(x >= 3);
      CHECK(x <= 9);
    }
    std::mt19937_64 a(123);
    std::mt19937_64 b(123);
    CHECK(uniform_int(a, 0, 1000) == uniform_int(b, 0, 1000));
  }

  TEST_CASE("random interval hypergraphs are connected interval hypergraphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Hypergraph h = random_interval_hypergraph(7, 6, 4, seed);
      CHECK(is_connected(h));
      CHECK(oracle::interval(h));
    }
    CHECK_THROWS_AS(random_interval_hypergraph(1, 3, 3, 1), InputError);
  }
}
