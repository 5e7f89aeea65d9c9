#include "ecp/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace ecp::gen {

namespace {

// Incremental builder that keeps rotations as editable vectors and
// validates once at the end.
struct Builder {
  int n = 0;
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<DartId>> rot;

  explicit Builder(int vertices) : n(vertices), rot(vertices) {}

  // Appends edge u-v; returns its id. Darts are appended to the back of
  // both rotations (callers reorder as needed).
  EdgeId add(Vertex u, Vertex v, Rational w = Rational(1)) {
    EdgeId e = static_cast<int>(edges.size());
    edges.push_back({u, v, w});
    rot[u].push_back(dart_forward(e));
    rot[v].push_back(dart_backward(e));
    return e;
  }

  EmbeddedMultigraph build() {
    return EmbeddedMultigraph::build(n, std::move(edges), std::move(rot));
  }
};

void insert_after(std::vector<DartId>& rot, DartId anchor, DartId fresh) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it == rot.end() ? rot.end() : it + 1, fresh);
}

}  // namespace

EmbeddedMultigraph path(int n) {
  if (n < 1) throw GraphError("path needs at least one vertex");
  Builder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
  return b.build();
}

EmbeddedMultigraph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  Builder b(n);
  for (int i = 0; i < n; ++i) b.add(i, (i + 1) % n);
  return b.build();
}

EmbeddedMultigraph grid(int w, int h) {
  if (w < 1 || h < 1) throw GraphError("grid needs positive dimensions");
  auto id = [w](int r, int c) { return r * w + c; };
  int n = w * h;
  std::vector<EdgeSpec> edges;
  // Horizontal edges first (row major), then vertical.
  std::map<std::pair<int, int>, EdgeId> eid;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c + 1 < w; ++c) {
      eid[{id(r, c), id(r, c + 1)}] = static_cast<int>(edges.size());
      edges.push_back({id(r, c), id(r, c + 1), Rational(1)});
    }
  for (int r = 0; r + 1 < h; ++r)
    for (int c = 0; c < w; ++c) {
      eid[{id(r, c), id(r + 1, c)}] = static_cast<int>(edges.size());
      edges.push_back({id(r, c), id(r + 1, c), Rational(1)});
    }
  auto dart_to = [&](int a, int b) {
    auto it = eid.find({a, b});
    if (it != eid.end()) return dart_forward(it->second);
    return dart_backward(eid.at({b, a}));
  };
  // Counterclockwise neighbor order: right, up, left, down (rows grow
  // downward in the drawing).
  std::vector<std::vector<DartId>> rot(n);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      if (c + 1 < w) rot[id(r, c)].push_back(dart_to(id(r, c), id(r, c + 1)));
      if (r > 0) rot[id(r, c)].push_back(dart_to(id(r, c), id(r - 1, c)));
      if (c > 0) rot[id(r, c)].push_back(dart_to(id(r, c), id(r, c - 1)));
      if (r + 1 < h) rot[id(r, c)].push_back(dart_to(id(r, c), id(r + 1, c)));
    }
  return EmbeddedMultigraph::build(n, std::move(edges), std::move(rot));
}

EmbeddedMultigraph wheel(int rim) {
  if (rim < 3) throw GraphError("wheel needs at least three rim vertices");
  int hub = rim;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < rim; ++i)
    edges.push_back({i, (i + 1) % rim, Rational(1)});  // rim edge i
  for (int i = 0; i < rim; ++i)
    edges.push_back({i, hub, Rational(1)});  // spoke rim+i
  std::vector<std::vector<DartId>> rot(rim + 1);
  for (int i = 0; i < rim; ++i) {
    DartId to_next = dart_forward(i);
    DartId to_prev = dart_backward((i + rim - 1) % rim);
    DartId to_hub = dart_forward(rim + i);
    rot[i] = {to_next, to_hub, to_prev};
  }
  for (int i = 0; i < rim; ++i) rot[hub].push_back(dart_backward(rim + i));
  return EmbeddedMultigraph::build(rim + 1, std::move(edges), std::move(rot));
}

EmbeddedMultigraph triangle() { return cycle(3); }

EmbeddedMultigraph k4() { return wheel(3); }

EmbeddedMultigraph octahedron() {
  // Outer triangle 0,1,2; inner triangle 3,4,5 with 3 opposite 0,
  // 4 opposite 1, 5 opposite 2. Rotations read off a symmetric drawing.
  Builder b(6);
  std::map<std::pair<int, int>, EdgeId> eid;
  auto add = [&](int u, int v) { eid[{u, v}] = b.add(u, v); };
  add(0, 1);
  add(1, 2);
  add(2, 0);
  add(3, 4);
  add(4, 5);
  add(5, 3);
  add(0, 4);
  add(0, 5);
  add(1, 3);
  add(1, 5);
  add(2, 3);
  add(2, 4);
  auto dart_to = [&](int a, int c) {
    auto it = eid.find({a, c});
    if (it != eid.end()) return dart_forward(it->second);
    return dart_backward(eid.at({c, a}));
  };
  auto set_rot = [&](int v, std::vector<int> nbrs) {
    b.rot[v].clear();
    for (int x : nbrs) b.rot[v].push_back(dart_to(v, x));
  };
  set_rot(0, {1, 5, 4, 2});
  set_rot(1, {2, 3, 5, 0});
  set_rot(2, {0, 4, 3, 1});
  set_rot(3, {4, 5, 1, 2});
  set_rot(4, {0, 5, 3, 2});
  set_rot(5, {4, 0, 1, 3});
  return b.build();
}

EmbeddedMultigraph theta() {
  Builder b(4);
  EdgeId e02 = b.add(0, 2);
  EdgeId e21 = b.add(2, 1);
  EdgeId e03 = b.add(0, 3);
  EdgeId e31 = b.add(3, 1);
  EdgeId e01 = b.add(0, 1);
  b.rot[0] = {dart_forward(e01), dart_forward(e02), dart_forward(e03)};
  b.rot[1] = {dart_backward(e21), dart_backward(e01), dart_backward(e31)};
  b.rot[2] = {dart_backward(e02), dart_forward(e21)};
  b.rot[3] = {dart_forward(e31), dart_backward(e03)};
  return b.build();
}

EmbeddedMultigraph random_triangulation(int n, Rng& rng) {
  if (n < 3) throw GraphError("triangulation needs at least three vertices");
  Builder b(n);
  std::map<std::pair<int, int>, EdgeId> eid;
  auto add_edge = [&](int u, int v) {
    EdgeId e = static_cast<int>(b.edges.size());
    b.edges.push_back({u, v, Rational(1)});
    eid[{std::min(u, v), std::max(u, v)}] = e;
    return e;
  };
  auto dart_to = [&](int a, int c) {
    EdgeId e = eid.at({std::min(a, c), std::max(a, c)});
    return b.edges[e].u == a ? dart_forward(e) : dart_backward(e);
  };

  add_edge(0, 1);
  add_edge(1, 2);
  add_edge(2, 0);
  b.rot[0] = {dart_to(0, 1), dart_to(0, 2)};
  b.rot[1] = {dart_to(1, 2), dart_to(1, 0)};
  b.rot[2] = {dart_to(2, 0), dart_to(2, 1)};

  // Faces tracked as corner triples consistent with the rotation system:
  // (a, b, c) names the face traced a->b->c->a.
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
  for (int u = 3; u < n; ++u) {
    std::size_t fi = rng() % faces.size();
    auto [a, bb, c] = faces[fi];
    add_edge(a, u);
    add_edge(bb, u);
    add_edge(c, u);
    // Each corner's new dart goes inside the face: between the darts to the
    // adjacent corners. Face a->b->c means at corner a the face sector lies
    // after dart a->c in ccw order (next_at_vertex(a->c) == a->b held).
    insert_after(b.rot[a], dart_to(a, c), dart_to(a, u));
    insert_after(b.rot[bb], dart_to(bb, a), dart_to(bb, u));
    insert_after(b.rot[c], dart_to(c, bb), dart_to(c, u));
    b.rot[u] = {dart_to(u, a), dart_to(u, c), dart_to(u, bb)};
    faces[fi] = {a, bb, u};
    faces.push_back({bb, c, u});
    faces.push_back({c, a, u});
  }
  return b.build();
}

EmbeddedMultigraph random_connected_planar(int n, double keep_prob, Rng& rng) {
  EmbeddedMultigraph tri = random_triangulation(n, rng);
  std::vector<EdgeId> order(tri.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> keep(tri.edge_count(), false);
  for (EdgeId e : order) {
    int ru = find(tri.edge(e).u), rv = find(tri.edge(e).v);
    if (ru != rv) {
      parent[ru] = rv;
      keep[e] = true;
    }
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (EdgeId e = 0; e < tri.edge_count(); ++e)
    if (!keep[e] && coin(rng) < keep_prob) keep[e] = true;

  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < tri.edge_count(); ++e)
    if (keep[e]) kept.push_back(e);
  return induce_subgraph(tri, kept).graph;
}

EmbeddedMultigraph with_random_weights(const EmbeddedMultigraph& g, Rng& rng,
                                       int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> w(g.edge_count());
  for (auto& x : w) x = Rational(dist(rng));
  return with_weights(g, std::move(w));
}

EmbeddedMultigraph with_weights(const EmbeddedMultigraph& g,
                                std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != g.edge_count())
    throw GraphError("weight vector size mismatch");
  std::vector<EdgeSpec> edges = g.edges();
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges[e].weight = weights[e];
  std::vector<std::vector<DartId>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rot[v] = g.rotation(v);
  return EmbeddedMultigraph::build(g.vertex_count(), std::move(edges),
                                   std::move(rot));
}

RequirementMap random_requirements(int n, Rng& rng, int max_req,
                                   int min_terminals) {
  if (min_terminals > n) throw GraphError("more terminals than vertices");
  std::uniform_int_distribution<int> dist(0, max_req);
  std::vector<int> req(n);
  for (auto& r : req) r = dist(rng);
  int terms = static_cast<int>(std::count_if(req.begin(), req.end(),
                                             [](int r) { return r > 0; }));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> pos(1, max_req);
  while (terms < min_terminals) {
    int v = pick(rng);
    if (req[v] == 0) {
      req[v] = pos(rng);
      ++terms;
    }
  }
  return RequirementMap(std::move(req));
}

}  // namespace ecp::gen
