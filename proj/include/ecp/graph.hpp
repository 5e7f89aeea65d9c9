#pragma once

#include <string>
#include <vector>

#include "ecp/rational.hpp"

namespace ecp {

using Vertex = int;
using EdgeId = int;
using DartId = int;

/// Edge e owns darts 2e (u -> v) and 2e + 1 (v -> u).
inline DartId dart_forward(EdgeId e) { return 2 * e; }
inline DartId dart_backward(EdgeId e) { return 2 * e + 1; }
inline EdgeId edge_of_dart(DartId d) { return d / 2; }
inline DartId dart_twin(DartId d) { return d ^ 1; }

struct EdgeSpec {
  Vertex u = -1;
  Vertex v = -1;
  Rational weight;
};

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Planar multigraph with an explicit rotation system (combinatorial
/// embedding). Immutable after build; all queries are pure, so instances
/// are safe to share across worker threads.
///
/// The rotation at a vertex lists its outgoing darts in counterclockwise
/// order. Faces are traced with the permutation d -> next_at_vertex(twin(d))
/// and are validated against Euler's formula per connected component at
/// build time, which rejects malformed or non-planar rotation systems.
class EmbeddedMultigraph {
 public:
  /// Validates and builds. `rotation[v]` must be a permutation of the darts
  /// whose tail is v. Self-loops and negative weights are rejected; duals
  /// of bridges need self-loops, so dual() builds with them allowed.
  static EmbeddedMultigraph build(int vertex_count, std::vector<EdgeSpec> edges,
                                  std::vector<std::vector<DartId>> rotation,
                                  bool allow_self_loops = false);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const EdgeSpec& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  Rational weight(EdgeId e) const { return edges_[e].weight; }
  Rational total_weight() const;

  Vertex head(DartId d) const {
    return (d & 1) ? edges_[d / 2].u : edges_[d / 2].v;
  }
  Vertex tail(DartId d) const { return head(dart_twin(d)); }
  DartId next_at_vertex(DartId d) const { return rotation_next_[d]; }
  const std::vector<DartId>& rotation(Vertex v) const { return rotation_[v]; }

  /// Darts of every face cycle; each dart appears in exactly one cycle.
  const std::vector<std::vector<DartId>>& faces() const { return faces_; }
  int face_of_dart(DartId d) const { return face_of_dart_[d]; }

  /// Other endpoint of edge e as seen from x.
  Vertex other_end(EdgeId e, Vertex x) const {
    return edges_[e].u == x ? edges_[e].v : edges_[e].u;
  }

  std::vector<EdgeId> incident_edges(Vertex v) const;

  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

  /// Face-vertex dual. Dual edge ids coincide with primal edge ids; the
  /// dual dart with id d runs from face_of_dart(d) to face_of_dart(twin(d)).
  /// Dual edge weights copy the primal weights.
  EmbeddedMultigraph dual() const;

  bool connected() const;

 private:
  int vertex_count_ = 0;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<DartId> rotation_next_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<int> face_of_dart_;

  void trace_faces();
  void check_euler() const;
};

/// Subgraph of a parent graph with id maps back to the parent. Rotations
/// are inherited by restriction, so planarity of the parent carries over.
struct Subgraph {
  EmbeddedMultigraph graph;
  std::vector<EdgeId> edge_to_parent;      // by subgraph edge id
  std::vector<Vertex> vertex_to_parent;    // by subgraph vertex id
  std::vector<Vertex> parent_vertex_to_sub;  // -1 where absent

  Vertex to_sub(Vertex parent_v) const { return parent_vertex_to_sub[parent_v]; }
};

/// Induces the subgraph on the given parent edges (ids need not be sorted;
/// duplicates rejected). Vertices are renumbered in ascending parent order,
/// edges in ascending parent-id order.
Subgraph induce_subgraph(const EmbeddedMultigraph& g,
                         const std::vector<EdgeId>& edge_ids);

/// Face cycles of the subgraph of g given by `sub_edges`, traced with g's
/// rotation restricted to those edges. Darts are g's dart ids.
std::vector<std::vector<DartId>> subgraph_faces(
    const EmbeddedMultigraph& g, const std::vector<bool>& sub_edge_mask);

/// Edges of g enclosed by the given face of the subgraph H (boundary edges
/// included). `face_cycle` must be one of subgraph_faces(g, h_mask); the
/// enclosed region is resolved combinatorially by merging g's faces across
/// edges absent from H. Throws GraphError if the cycle is not a face of H.
std::vector<EdgeId> enclosed_subgraph(const EmbeddedMultigraph& g,
                                      const std::vector<bool>& h_mask,
                                      const std::vector<DartId>& face_cycle);

/// Vertex requirements in {0,..,3}; terminals are the positive support.
class RequirementMap {
 public:
  RequirementMap() = default;
  explicit RequirementMap(std::vector<int> req);

  int operator()(Vertex v) const { return req_[v]; }
  int size() const { return static_cast<int>(req_.size()); }
  const std::vector<int>& values() const { return req_; }
  std::vector<Vertex> terminals() const;
  int max_requirement() const;

  void set(Vertex v, int r);

 private:
  std::vector<int> req_;
};

/// Multi-subgraph as per-edge multiplicities in 0..k.
struct MultiSolution {
  std::vector<int> mult;
  int k = 3;

  MultiSolution() = default;
  MultiSolution(int edge_count, int k_) : mult(edge_count, 0), k(k_) {}

  Rational weight(const EmbeddedMultigraph& g) const;
  bool empty() const;
  void check_bounds() const;
};

}  // namespace ecp
