#include "ecp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ecp {

namespace {

// Plain union-find over dense int ids.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EmbeddedMultigraph EmbeddedMultigraph::build(
    int vertex_count, std::vector<EdgeSpec> edges,
    std::vector<std::vector<DartId>> rotation, bool allow_self_loops) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw GraphError("rotation table size does not match vertex count");

  EmbeddedMultigraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.rotation_ = std::move(rotation);

  const int m = g.edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    const EdgeSpec& spec = g.edges_[e];
    if (spec.u < 0 || spec.u >= vertex_count || spec.v < 0 ||
        spec.v >= vertex_count)
      throw GraphError("edge endpoint out of range");
    if (spec.u == spec.v && !allow_self_loops)
      throw GraphError("self-loops are rejected");
    if (spec.weight.is_negative()) throw GraphError("negative edge weight");
  }

  // The rotation at v must be a permutation of the darts whose tail is v.
  std::vector<int> expected_degree(vertex_count, 0);
  for (EdgeId e = 0; e < m; ++e) {
    ++expected_degree[g.edges_[e].u];
    ++expected_degree[g.edges_[e].v];
  }
  std::vector<bool> seen(2 * m, false);
  g.rotation_next_.assign(2 * m, -1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& rot = g.rotation_[v];
    if (static_cast<int>(rot.size()) != expected_degree[v])
      throw GraphError("rotation at vertex " + std::to_string(v) +
                       " does not list all incident darts");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      if (d < 0 || d >= 2 * m) throw GraphError("rotation lists unknown dart");
      if (g.tail(d) != v)
        throw GraphError("rotation at vertex " + std::to_string(v) +
                         " lists dart " + std::to_string(d) +
                         " with a different tail");
      if (seen[d]) throw GraphError("dart listed twice in rotation system");
      seen[d] = true;
      g.rotation_next_[d] = rot[(i + 1) % rot.size()];
    }
  }

  g.trace_faces();
  g.check_euler();
  return g;
}

void EmbeddedMultigraph::trace_faces() {
  const int nd = dart_count();
  face_of_dart_.assign(nd, -1);
  faces_.clear();
  for (DartId start = 0; start < nd; ++start) {
    if (face_of_dart_[start] != -1) continue;
    std::vector<DartId> cycle;
    DartId d = start;
    while (face_of_dart_[d] == -1) {
      face_of_dart_[d] = static_cast<int>(faces_.size());
      cycle.push_back(d);
      d = rotation_next_[dart_twin(d)];
    }
    if (d != start) throw GraphError("face traversal is not a permutation");
    faces_.push_back(std::move(cycle));
  }
}

void EmbeddedMultigraph::check_euler() const {
  // V - E + F = 2 per connected component with at least one edge; isolated
  // vertices embed trivially. A failed check signals a rotation system that
  // does not describe a plane embedding.
  UnionFind uf(vertex_count_);
  for (const EdgeSpec& e : edges_) uf.unite(e.u, e.v);

  std::vector<int> vcount(vertex_count_, 0), ecount(vertex_count_, 0),
      fcount(vertex_count_, 0);
  for (Vertex v = 0; v < vertex_count_; ++v) ++vcount[uf.find(v)];
  for (const EdgeSpec& e : edges_) ++ecount[uf.find(e.u)];
  for (const auto& cycle : faces_) ++fcount[uf.find(tail(cycle.front()))];

  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (uf.find(v) != v || ecount[v] == 0) continue;
    if (vcount[v] - ecount[v] + fcount[v] != 2)
      throw GraphError("Euler check failed: rotation system is not planar");
  }
}

Rational EmbeddedMultigraph::total_weight() const {
  Rational w;
  for (const EdgeSpec& e : edges_) w += e.weight;
  return w;
}

std::vector<EdgeId> EmbeddedMultigraph::incident_edges(Vertex v) const {
  std::vector<EdgeId> out;
  out.reserve(rotation_[v].size());
  for (DartId d : rotation_[v]) out.push_back(edge_of_dart(d));
  return out;
}

EmbeddedMultigraph EmbeddedMultigraph::dual() const {
  const int nf = face_count();
  std::vector<EdgeSpec> dual_edges(edges_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    // Dual dart 2e runs from the face of dart 2e, matching the primal ids.
    dual_edges[e].u = face_of_dart_[dart_forward(e)];
    dual_edges[e].v = face_of_dart_[dart_backward(e)];
    dual_edges[e].weight = edges_[e].weight;
  }
  std::vector<std::vector<DartId>> rot(nf);
  for (int f = 0; f < nf; ++f) {
    rot[f] = faces_[f];  // face-cycle order is the dual rotation
  }
  // A bridge has both sides on the same face, so its dual edge is a
  // self-loop; allowed here even though input graphs reject them.
  return EmbeddedMultigraph::build(nf, std::move(dual_edges), std::move(rot),
                                   /*allow_self_loops=*/true);
}

bool EmbeddedMultigraph::connected() const {
  if (vertex_count_ == 0) return true;
  UnionFind uf(vertex_count_);
  for (const EdgeSpec& e : edges_) uf.unite(e.u, e.v);
  int root = uf.find(0);
  for (Vertex v = 1; v < vertex_count_; ++v)
    if (uf.find(v) != root) return false;
  return true;
}

Subgraph induce_subgraph(const EmbeddedMultigraph& g,
                         const std::vector<EdgeId>& edge_ids) {
  std::vector<EdgeId> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw GraphError("duplicate edge id in subgraph induction");

  Subgraph sub;
  sub.parent_vertex_to_sub.assign(g.vertex_count(), -1);
  for (EdgeId e : ids) {
    if (e < 0 || e >= g.edge_count())
      throw GraphError("subgraph edge id out of range");
    for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
      if (sub.parent_vertex_to_sub[v] == -1) {
        sub.parent_vertex_to_sub[v] = 0;  // mark; numbered below
      }
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sub.parent_vertex_to_sub[v] == 0) {
      sub.parent_vertex_to_sub[v] = static_cast<int>(sub.vertex_to_parent.size());
      sub.vertex_to_parent.push_back(v);
    } else {
      sub.parent_vertex_to_sub[v] = -1;
    }
  }

  std::vector<int> parent_edge_to_sub(g.edge_count(), -1);
  std::vector<EdgeSpec> edges;
  edges.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const EdgeSpec& pe = g.edge(ids[i]);
    parent_edge_to_sub[ids[i]] = static_cast<int>(i);
    edges.push_back({sub.parent_vertex_to_sub[pe.u],
                     sub.parent_vertex_to_sub[pe.v], pe.weight});
  }
  sub.edge_to_parent = ids;

  std::vector<std::vector<DartId>> rot(sub.vertex_to_parent.size());
  for (std::size_t sv = 0; sv < sub.vertex_to_parent.size(); ++sv) {
    for (DartId d : g.rotation(sub.vertex_to_parent[sv])) {
      int se = parent_edge_to_sub[edge_of_dart(d)];
      if (se == -1) continue;
      rot[sv].push_back((d & 1) ? dart_backward(se) : dart_forward(se));
    }
  }
  sub.graph = EmbeddedMultigraph::build(
      static_cast<int>(sub.vertex_to_parent.size()), std::move(edges),
      std::move(rot));
  return sub;
}

std::vector<std::vector<DartId>> subgraph_faces(
    const EmbeddedMultigraph& g, const std::vector<bool>& sub_edge_mask) {
  const int nd = g.dart_count();
  // Rotation successor restricted to subgraph darts.
  std::vector<DartId> next(nd, -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    std::vector<DartId> mine;
    for (DartId d : rot)
      if (sub_edge_mask[edge_of_dart(d)]) mine.push_back(d);
    for (std::size_t i = 0; i < mine.size(); ++i)
      next[mine[i]] = mine[(i + 1) % mine.size()];
  }
  std::vector<std::vector<DartId>> out;
  std::vector<bool> visited(nd, false);
  for (DartId start = 0; start < nd; ++start) {
    if (!sub_edge_mask[edge_of_dart(start)] || visited[start]) continue;
    std::vector<DartId> cycle;
    DartId d = start;
    while (!visited[d]) {
      visited[d] = true;
      cycle.push_back(d);
      d = next[dart_twin(d)];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<EdgeId> enclosed_subgraph(const EmbeddedMultigraph& g,
                                      const std::vector<bool>& h_mask,
                                      const std::vector<DartId>& face_cycle) {
  if (face_cycle.empty()) throw GraphError("empty face cycle");

  // Verify the cycle is a face of H (up to cyclic rotation).
  auto normalize = [](std::vector<DartId> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    return c;
  };
  std::vector<DartId> wanted = normalize(face_cycle);
  bool found = false;
  for (const auto& f : subgraph_faces(g, h_mask)) {
    if (normalize(f) == wanted) {
      found = true;
      break;
    }
  }
  if (!found) throw GraphError("given cycle is not a face of the subgraph");

  // Faces of H correspond to classes of g's faces merged across non-H edges.
  UnionFind uf(g.face_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!h_mask[e])
      uf.unite(g.face_of_dart(dart_forward(e)),
               g.face_of_dart(dart_backward(e)));
  }
  int region = uf.find(g.face_of_dart(face_cycle.front()));

  std::vector<bool> in_brick(g.edge_count(), false);
  for (DartId d : face_cycle) in_brick[edge_of_dart(d)] = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!h_mask[e] && uf.find(g.face_of_dart(dart_forward(e))) == region)
      in_brick[e] = true;
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_brick[e]) out.push_back(e);
  return out;
}

RequirementMap::RequirementMap(std::vector<int> req) : req_(std::move(req)) {
  for (int r : req_)
    if (r < 0 || r > 3) throw GraphError("requirement outside {0,1,2,3}");
}

void RequirementMap::set(Vertex v, int r) {
  if (r < 0 || r > 3) throw GraphError("requirement outside {0,1,2,3}");
  req_[v] = r;
}

std::vector<Vertex> RequirementMap::terminals() const {
  std::vector<Vertex> q;
  for (Vertex v = 0; v < size(); ++v)
    if (req_[v] > 0) q.push_back(v);
  return q;
}

int RequirementMap::max_requirement() const {
  int m = 0;
  for (int r : req_) m = std::max(m, r);
  return m;
}

Rational MultiSolution::weight(const EmbeddedMultigraph& g) const {
  Rational w;
  for (EdgeId e = 0; e < static_cast<int>(mult.size()); ++e)
    if (mult[e] > 0) w += g.weight(e) * Rational(mult[e]);
  return w;
}

bool MultiSolution::empty() const {
  for (int m : mult)
    if (m > 0) return false;
  return true;
}

void MultiSolution::check_bounds() const {
  for (int m : mult)
    if (m < 0 || m > k) throw GraphError("multiplicity outside 0..k");
}

}  // namespace ecp
