#pragma once

#include <optional>

#include "ecp/graph.hpp"

namespace ecp {

/// Single-source shortest paths with exact rational distances.
/// Ties are broken toward the lexicographically smaller predecessor vertex
/// (then edge id) so that extracted paths are deterministic.
struct ShortestPaths {
  std::vector<Rational> dist;
  std::vector<Vertex> parent;       // -1 at the source / unreached
  std::vector<EdgeId> parent_edge;  // -1 at the source / unreached
  std::vector<bool> reached;

  /// Edge ids of the tree path source -> v.
  std::vector<EdgeId> path_to(Vertex v) const;
};

/// When edge_mask is given, only masked edges participate.
ShortestPaths dijkstra(const EmbeddedMultigraph& g, Vertex source,
                       const std::vector<bool>* edge_mask = nullptr);

Rational edge_set_weight(const EmbeddedMultigraph& g,
                         const std::vector<EdgeId>& edges);

/// Metric-closure MST heuristic; result is a tree spanning the terminals
/// with weight at most twice the optimum. Throws GraphError when the
/// terminals are not connected in g.
std::vector<EdgeId> approx_steiner(const EmbeddedMultigraph& g,
                                   const std::vector<Vertex>& terminals);

/// Exact minimum Steiner tree by subset dynamic programming.
/// |terminals| must not exceed `cap` (default 12).
std::vector<EdgeId> exact_steiner(const EmbeddedMultigraph& g,
                                  const std::vector<Vertex>& terminals,
                                  int cap = 12,
                                  const std::vector<bool>* edge_mask = nullptr);

/// True when `edges` forms a tree (acyclic, one component) containing all
/// the given vertices.
bool is_steiner_tree(const EmbeddedMultigraph& g,
                     const std::vector<EdgeId>& edges,
                     const std::vector<Vertex>& terminals);

}  // namespace ecp
