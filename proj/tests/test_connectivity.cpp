#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecp/connectivity.hpp"
#include "ecp/generators.hpp"
#include "test_util.hpp"

using namespace ecp;

namespace {

MultiSolution all_ones(const EmbeddedMultigraph& g, int k = 3) {
  MultiSolution s(g.edge_count(), k);
  std::fill(s.mult.begin(), s.mult.end(), 1);
  return s;
}

}  // namespace

TEST_CASE("edge connectivity on simple fixtures") {
  EmbeddedMultigraph c4 = gen::cycle(4);
  CHECK(edge_connectivity(c4, 0, 2) == 2);

  EmbeddedMultigraph tri = gen::triangle();
  MultiSolution doubled(3, 3);
  std::fill(doubled.mult.begin(), doubled.mult.end(), 2);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}})
    CHECK(edge_connectivity(tri, doubled, u, v) == 4);

  // Edges of the triangle: 0-1, 1-2, 2-0. Doubling 0-1 and 1-2 gives the
  // pair across them (0, 2) the direct edge plus two routes through 1.
  MultiSolution mixed(3, 3);
  mixed.mult = {2, 2, 1};
  CHECK(edge_connectivity(tri, mixed, 0, 2) == 3);
  CHECK(edge_connectivity(tri, mixed, 0, 2) ==
        testutil::brute_edge_connectivity(tri, mixed.mult, 0, 2));

  CHECK_THROWS_AS(edge_connectivity(tri, 1, 1), GraphError);
}

TEST_CASE("vertex connectivity on simple fixtures") {
  EmbeddedMultigraph k4 = gen::k4();
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(vertex_connectivity(k4, u, v) == 3);

  EmbeddedMultigraph p3 = gen::path(3);
  CHECK(vertex_connectivity(p3, 0, 2) == 1);

  EmbeddedMultigraph w5 = gen::wheel(5);
  CHECK(vertex_connectivity(w5, 5, 0) == 3);
  CHECK(vertex_connectivity(w5, 5, 0) ==
        testutil::brute_vertex_connectivity(w5, 5, 0));
  CHECK_THROWS_AS(vertex_connectivity(w5, 2, 2), GraphError);
}

TEST_CASE("feasibility checks") {
  EmbeddedMultigraph tri = gen::triangle();
  RequirementMap none(std::vector<int>{0, 0, 0});
  MultiSolution empty(3, 3);
  CHECK(is_feasible(tri, empty, none));

  RequirementMap two_ones(std::vector<int>{1, 0, 1});
  MultiSolution one_path(3, 3);
  one_path.mult = {1, 1, 0};  // 0-1-2
  CHECK(is_feasible(tri, one_path, two_ones));
  CHECK(!is_feasible(tri, empty, two_ones));

  RequirementMap all3(std::vector<int>{3, 3, 3});
  CHECK(!is_feasible(tri, all_ones(tri), all3));
  auto [u, v] = first_violation(tri, all_ones(tri), all3);
  CHECK(u >= 0);
  CHECK(v >= 0);

  // A single terminal is vacuously satisfied.
  RequirementMap lone(std::vector<int>{3, 0, 0});
  CHECK(is_feasible(tri, empty, lone));
}

TEST_CASE("minimalize removes redundancy deterministically") {
  EmbeddedMultigraph tri = gen::triangle();
  RequirementMap all3(std::vector<int>{3, 3, 3});
  MultiSolution fat(3, 3);
  fat.mult = {2, 2, 2};  // weight 6, feasible
  REQUIRE(is_feasible(tri, fat, all3));
  MultiSolution slim = minimalize(tri, fat, all3);
  CHECK(is_feasible(tri, slim, all3));
  CHECK(slim.weight(tri) == Rational(5));
  // Removing any single remaining copy breaks feasibility.
  for (EdgeId e = 0; e < 3; ++e) {
    if (slim.mult[e] == 0) continue;
    MultiSolution probe = slim;
    --probe.mult[e];
    CHECK(!is_feasible(tri, probe, all3));
  }

  // Already minimal input comes back unchanged.
  CHECK(minimalize(tri, slim, all3).mult == slim.mult);

  // Two parallel routes for two r=1 terminals collapse to one path.
  EmbeddedMultigraph c4 = gen::cycle(4);
  RequirementMap ends(std::vector<int>{1, 0, 1, 0});
  MultiSolution both(4, 3);
  both.mult = {1, 1, 1, 1};
  MultiSolution single = minimalize(c4, both, ends);
  CHECK(single.weight(c4) == Rational(2));

  MultiSolution infeasible(3, 3);
  CHECK_THROWS_AS(minimalize(tri, infeasible, all3), GraphError);
}

TEST_CASE("Menger cross-check on random multigraphs") {
  Rng rng(20260809);
  int instances = 0;
  while (instances < 60) {
    int n = 4 + static_cast<int>(rng() % 5);  // up to 8 vertices
    EmbeddedMultigraph g = gen::random_connected_planar(n, 0.5, rng);
    MultiSolution sol(g.edge_count(), 3);
    for (auto& m : sol.mult) m = static_cast<int>(rng() % 4);
    Vertex u = static_cast<int>(rng() % g.vertex_count());
    Vertex v = static_cast<int>(rng() % g.vertex_count());
    if (u == v) continue;
    int fast = edge_connectivity(g, sol, u, v);
    int slow = testutil::brute_edge_connectivity(g, sol.mult, u, v);
    CHECK(fast == slow);
    ++instances;
  }
}

TEST_CASE("vertex connectivity agrees with exhaustive packing") {
  Rng rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    EmbeddedMultigraph g = gen::random_connected_planar(n, 0.6, rng);
    Vertex u = static_cast<int>(rng() % g.vertex_count());
    Vertex v = static_cast<int>(rng() % g.vertex_count());
    if (u == v) continue;
    CHECK(vertex_connectivity(g, u, v) ==
          testutil::brute_vertex_connectivity(g, u, v));
  }
}

TEST_CASE("feasibility is monotone under added copies") {
  Rng rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    EmbeddedMultigraph g = gen::random_connected_planar(n, 0.5, rng);
    RequirementMap r = gen::random_requirements(n, rng, 3, 2);
    MultiSolution sol(g.edge_count(), 3);
    for (auto& m : sol.mult) m = static_cast<int>(rng() % 4);
    if (!is_feasible(g, sol, r)) continue;
    MultiSolution bigger = sol;
    for (auto& m : bigger.mult)
      m = std::min(3, m + static_cast<int>(rng() % 2));
    CHECK(is_feasible(g, bigger, r));
  }
}

TEST_CASE("minimalize output is feasible and one-copy-minimal") {
  Rng rng(777);
  int done = 0;
  while (done < 20) {
    int n = 4 + static_cast<int>(rng() % 4);
    EmbeddedMultigraph g = gen::random_connected_planar(n, 0.5, rng);
    RequirementMap r = gen::random_requirements(n, rng, 3, 2);
    MultiSolution full(g.edge_count(), 3);
    std::fill(full.mult.begin(), full.mult.end(), 3);
    if (!is_feasible(g, full, r)) continue;
    MultiSolution min = minimalize(g, full, r);
    CHECK(is_feasible(g, min, r));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (min.mult[e] == 0) continue;
      MultiSolution probe = min;
      --probe.mult[e];
      CHECK(!is_feasible(g, probe, r));
    }
    ++done;
  }
}
