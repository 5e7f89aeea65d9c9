#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ecp/generators.hpp"
#include "ecp/graph.hpp"
#include "ecp/graph_io.hpp"

using namespace ecp;

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3) * Rational(2, 3) == Rational(2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) < Rational(0));
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("triangle embedding: faces and Euler") {
  EmbeddedMultigraph g = gen::triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.face_count() == 2);
  for (const auto& f : g.faces()) CHECK(f.size() == 3);
}

TEST_CASE("single edge: one face walked twice") {
  EmbeddedMultigraph g = gen::path(2);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.face_count() == 1);
  CHECK(g.faces()[0].size() == 2);
}

TEST_CASE("two-edge path: a single face of length four") {
  EmbeddedMultigraph g = gen::path(3);
  CHECK(g.face_count() == 1);
  CHECK(g.faces()[0].size() == 4);
}

TEST_CASE("grid face counts") {
  // 3x3 vertices: four unit faces plus the outer walk of length 8.
  EmbeddedMultigraph g = gen::grid(3, 3);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
  std::multiset<std::size_t> lens;
  for (const auto& f : g.faces()) lens.insert(f.size());
  CHECK(lens == std::multiset<std::size_t>{4, 4, 4, 4, 8});

  // 4x4 vertices: nine inner faces plus the outer one.
  CHECK(gen::grid(4, 4).face_count() == 10);
}

TEST_CASE("every dart lies on exactly one face") {
  EmbeddedMultigraph g = gen::grid(4, 3);
  std::vector<int> count(g.dart_count(), 0);
  for (const auto& f : g.faces())
    for (DartId d : f) ++count[d];
  CHECK(std::all_of(count.begin(), count.end(), [](int c) { return c == 1; }));
}

TEST_CASE("malformed rotation systems are rejected") {
  // Duplicate dart in a rotation.
  std::vector<EdgeSpec> edges{{0, 1, Rational(1)}, {1, 2, Rational(1)}};
  CHECK_THROWS_AS(EmbeddedMultigraph::build(3, edges, {{0}, {1, 1, 2}, {3}}),
                  GraphError);
  // Dart listed at the wrong vertex.
  CHECK_THROWS_AS(EmbeddedMultigraph::build(3, edges, {{1}, {0, 2}, {3}}),
                  GraphError);
  // Self-loop.
  CHECK_THROWS_AS(
      EmbeddedMultigraph::build(1, {{0, 0, Rational(1)}}, {{0, 1}}),
      GraphError);
  // Negative weight.
  CHECK_THROWS_AS(
      EmbeddedMultigraph::build(2, {{0, 1, Rational(-1)}}, {{0}, {1}}),
      GraphError);
}

TEST_CASE("non-planar rotation data fails the Euler check") {
  // K5 cannot satisfy Euler's formula no matter the rotations.
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v, Rational(1)});
  std::vector<std::vector<DartId>> rot(5);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    rot[edges[e].u].push_back(dart_forward(e));
    rot[edges[e].v].push_back(dart_backward(e));
  }
  CHECK_THROWS_AS(EmbeddedMultigraph::build(5, edges, rot), GraphError);
}

TEST_CASE("dual of the triangle: two vertices, three parallel edges") {
  EmbeddedMultigraph d = gen::triangle().dual();
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 3);
  for (EdgeId e = 0; e < 3; ++e) CHECK(d.edge(e).u != d.edge(e).v);
}

TEST_CASE("dual of a single edge: one vertex with a self-loop") {
  EmbeddedMultigraph d = gen::path(2).dual();
  CHECK(d.vertex_count() == 1);
  CHECK(d.edge_count() == 1);
  CHECK(d.edge(0).u == d.edge(0).v);
  CHECK(d.face_count() == 2);
}

TEST_CASE("3x3-cell grid dual has five vertices") {
  CHECK(gen::grid(3, 3).dual().vertex_count() == 5);
}

TEST_CASE("dual round trip: faces of the dual are primal vertices") {
  for (const EmbeddedMultigraph& g :
       {gen::triangle(), gen::grid(3, 3), gen::wheel(5), gen::octahedron(),
        gen::theta()}) {
    EmbeddedMultigraph d = g.dual();
    CHECK(d.edge_count() == g.edge_count());
    CHECK(d.face_count() == g.vertex_count());
    // Every dual face groups darts with a common primal tail, and the
    // grouping hits each primal vertex exactly once.
    std::set<Vertex> seen;
    for (const auto& f : d.faces()) {
      Vertex t = g.tail(f.front());
      for (DartId dd : f) CHECK(g.tail(dd) == t);
      CHECK(!seen.count(t));
      seen.insert(t);
    }
    // Dual of dual has the primal's incidences under that bijection.
    EmbeddedMultigraph dd = d.dual();
    std::vector<Vertex> face_to_vertex(d.face_count());
    for (int f = 0; f < d.face_count(); ++f)
      face_to_vertex[f] = g.tail(d.faces()[f].front());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      std::pair<Vertex, Vertex> got{face_to_vertex[dd.edge(e).u],
                                    face_to_vertex[dd.edge(e).v]};
      std::pair<Vertex, Vertex> want{g.edge(e).u, g.edge(e).v};
      bool match = got == want || (got.first == want.second &&
                                   got.second == want.first);
      CHECK(match);
    }
  }
}

TEST_CASE("enclosed subgraph: whole triangle from either face") {
  EmbeddedMultigraph g = gen::triangle();
  std::vector<bool> mask(3, true);
  auto faces = subgraph_faces(g, mask);
  REQUIRE(faces.size() == 2);
  for (const auto& f : faces) {
    auto brick = enclosed_subgraph(g, mask, f);
    CHECK(brick.size() == 3);
  }
}

TEST_CASE("enclosed subgraph: wheel hub enclosed by the rim") {
  EmbeddedMultigraph g = gen::wheel(4);
  std::vector<bool> rim(g.edge_count(), false);
  for (EdgeId e = 0; e < 4; ++e) rim[e] = true;
  auto faces = subgraph_faces(g, rim);
  REQUIRE(faces.size() == 2);
  // One side encloses the spokes, the other nothing.
  std::multiset<std::size_t> sizes;
  for (const auto& f : faces) sizes.insert(enclosed_subgraph(g, rim, f).size());
  CHECK(sizes == std::multiset<std::size_t>{4, 8});
}

TEST_CASE("enclosed subgraph: grid interior from the boundary cycle") {
  EmbeddedMultigraph g = gen::grid(3, 3);
  // Boundary edges: those on the outer face.
  std::vector<bool> boundary(g.edge_count(), false);
  const auto& faces = g.faces();
  std::size_t outer = 0;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].size() == 8) outer = i;
  for (DartId d : faces[outer]) boundary[edge_of_dart(d)] = true;
  auto sub_faces = subgraph_faces(g, boundary);
  REQUIRE(sub_faces.size() == 2);
  for (const auto& f : sub_faces) {
    auto brick = enclosed_subgraph(g, boundary, f);
    // Inner face of the boundary cycle yields all 12 edges; outer yields 8.
    CHECK((brick.size() == 12 || brick.size() == 8));
  }
  CHECK_THROWS_AS(enclosed_subgraph(g, boundary, {0, 2}), GraphError);
}

TEST_CASE("subgraph induction preserves embedding and ids") {
  EmbeddedMultigraph g = gen::grid(4, 4);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); e += 2) ids.push_back(e);
  // Dropping every other edge still yields a valid plane subgraph.
  Subgraph s = induce_subgraph(g, ids);
  CHECK(s.graph.edge_count() == static_cast<int>(ids.size()));
  for (int i = 0; i < s.graph.edge_count(); ++i) {
    EdgeId pe = s.edge_to_parent[i];
    CHECK(s.vertex_to_parent[s.graph.edge(i).u] == g.edge(pe).u);
    CHECK(s.vertex_to_parent[s.graph.edge(i).v] == g.edge(pe).v);
  }
}

TEST_CASE("random triangulations satisfy the embedding invariants") {
  Rng rng(20240809);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 12);
    EmbeddedMultigraph g = gen::random_triangulation(n, rng);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == 3 * n - 6);
    CHECK(g.face_count() == 2 * n - 4);
    for (const auto& f : g.faces()) CHECK(f.size() == 3);
    CHECK(g.dual().face_count() == n);
    for (DartId d = 0; d < g.dart_count(); ++d) {
      CHECK(dart_twin(dart_twin(d)) == d);
      CHECK(dart_twin(d) != d);
    }
  }
}

TEST_CASE("random connected planar subgraphs stay valid") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    EmbeddedMultigraph g = gen::random_connected_planar(8, 0.4, rng);
    CHECK(g.connected());
    CHECK(g.vertex_count() <= 8);
  }
}

TEST_CASE("graph file format round trips bit-exactly") {
  Rng rng(99);
  EmbeddedMultigraph g = gen::with_random_weights(gen::grid(3, 2), rng, 1, 9);
  std::vector<int> req(g.vertex_count(), 0);
  req[0] = 3;
  req[5] = 2;
  GraphInstance gi{g, RequirementMap(req)};
  std::string text = write_graph(gi);
  GraphInstance back = parse_graph_string(text);
  CHECK(write_graph(back) == text);
  CHECK(back.graph.edge_count() == g.edge_count());
  CHECK(back.requirements(0) == 3);
  CHECK(back.requirements(5) == 2);

  // Fractional weights survive the round trip.
  auto g2 = gen::with_weights(gen::triangle(),
                              {Rational(1, 3), Rational(5, 2), Rational(7)});
  GraphInstance gi2{g2, RequirementMap(std::vector<int>(3, 0))};
  CHECK(write_graph(parse_graph_string(write_graph(gi2))) == write_graph(gi2));

  CHECK_THROWS_AS(parse_graph_string("planar-graph v2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_string(""), ParseError);
}

TEST_CASE("solution file round trip") {
  MultiSolution sol(5, 3);
  sol.mult = {0, 2, 0, 3, 1};
  MultiSolution back = parse_solution_string(write_solution(sol), 5);
  CHECK(back.mult == sol.mult);
  CHECK(back.k == 3);
}
