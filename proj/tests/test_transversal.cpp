#include <doctest.h>

#include "helpers.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/transversal.hpp"
#include "hyperconn/verify.hpp"
#include "oracles.hpp"

using namespace hyperconn;
using testing_support::H;
using testing_support::random_instance;

TEST_SUITE("transversal") {
  TEST_CASE("tau") {
    const auto p = tau(H(3, {{0, 1}, {1, 2}}));
    CHECK(p.tau == 1);
    CHECK(p.witness == VertexSet{1});
    CHECK(tau(fano()).tau == 3);
    const auto k3 = vc_reduction(Graph{3, {{0, 1}, {1, 2}, {0, 2}}});
    CHECK(tau(k3.hypergraph).tau <= 3);
    CHECK(tau(Hypergraph{}).tau == 0);
    CHECK(tau(H(3, {{}, {}})).witness.empty());
  }

  TEST_CASE("alpha") {
    CHECK(alpha(fano()).alpha == 1);
    const auto two = alpha(H(4, {{0, 1}, {2, 3}}));
    CHECK(two.alpha == 2);
    CHECK(two.witness == EdgeSet{0, 1});
    const auto k3 = vc_reduction(Graph{3, {{0, 1}, {1, 2}, {0, 2}}});
    CHECK(alpha(k3.hypergraph).alpha == 3);
    CHECK(alpha(H(2, {{}})).alpha == 0);
  }

  TEST_CASE("greedy transversal") {
    CHECK(greedy_transversal(H(3, {{0, 1}, {1, 2}})) == VertexSet{1});
    const VertexSet g = greedy_transversal(fano());
    CHECK(g.size() >= 3);
    CHECK(is_transversal(fano(), g));
    CHECK(greedy_transversal(H(4, {})).empty());
  }

  TEST_CASE("konig property") {
    CHECK_FALSE(has_konig(fano()));
    CHECK(has_konig(H(3, {{0, 1}, {1, 2}})));
    CHECK(has_konig(vc_reduction(Graph{4, {{0, 1}, {1, 2}, {2, 3}}}).hypergraph));
  }

  TEST_CASE("exact values match brute force") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Hypergraph h = random_instance(seed, 10, 12, 4);
      const auto t = tau(h);
      const auto a = alpha(h);
      CHECK(t.tau == oracle::tau(h));
      CHECK(t.witness.size() == t.tau);
      CHECK(is_transversal(h, t.witness));
      CHECK(a.alpha == oracle::alpha(h));
      CHECK(is_matching(h, a.witness));
      CHECK(a.alpha <= t.tau);
      CHECK(greedy_transversal(h).size() >= t.tau);
    }
  }

  TEST_CASE("small transversals are strong cuts") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Hypergraph h = normalize(random_instance(seed, 9, 10, 4));
      if (!is_connected(h) || h.num_edges() == 0) continue;
      const auto t = tau(h);
      if (t.tau + 2 <= h.num_vertices()) CHECK(verify_strong_vertex_cut(h, t.witness));
    }
  }

  TEST_CASE("singleton edges force their vertex") {
    const auto r = tau(H(4, {{3}, {0, 1}, {1, 2}}));
    CHECK(r.tau == 2);
    CHECK(r.witness == VertexSet{1, 3});
  }
}
