#pragma once

#include "ecp/graph.hpp"

namespace ecp {

struct ConnectivityReport {
  Vertex u = -1;
  Vertex v = -1;
  int lambda = 0;           // max edge-disjoint paths
  int kappa = -1;           // max internally vertex-disjoint paths; -1 if not computed
};

/// Max edge-disjoint u-to-v paths in the multigraph given by sol's
/// multiplicities (unit capacity per edge copy). Throws GraphError on u == v.
int edge_connectivity(const EmbeddedMultigraph& g, const MultiSolution& sol,
                      Vertex u, Vertex v);

/// Same over the plain graph (every edge multiplicity 1).
int edge_connectivity(const EmbeddedMultigraph& g, Vertex u, Vertex v);

/// Max internally vertex-disjoint u-to-v paths (vertex-splitting max-flow);
/// parallel u-v edges each count as a path.
int vertex_connectivity(const EmbeddedMultigraph& g, Vertex u, Vertex v);
int vertex_connectivity(const EmbeddedMultigraph& g, const MultiSolution& sol,
                        Vertex u, Vertex v);

/// Pairwise relaxed feasibility: every terminal pair u,v has
/// edge_connectivity(sol, u, v) >= min(r(u), r(v)). Vacuously true with
/// fewer than two terminals.
bool is_feasible(const EmbeddedMultigraph& g, const MultiSolution& sol,
                 const RequirementMap& r);

/// Returns a violated terminal pair, or (-1,-1) when feasible.
std::pair<Vertex, Vertex> first_violation(const EmbeddedMultigraph& g,
                                          const MultiSolution& sol,
                                          const RequirementMap& r);

enum class ConnMode { Edge, Vertex };

/// Vertex-sense feasibility used by the structure lab: every terminal pair
/// has vertex_connectivity >= min(r(u), r(v)) in the subgraph.
bool is_feasible_subgraph(const EmbeddedMultigraph& g,
                          const std::vector<bool>& edge_mask,
                          const RequirementMap& r, ConnMode mode);

/// Greedy single-copy removal until removing any one copy breaks
/// feasibility. Removal order: nonincreasing weight, ties by edge id.
/// Throws GraphError when the input is infeasible.
MultiSolution minimalize(const EmbeddedMultigraph& g, const MultiSolution& sol,
                         const RequirementMap& r);

/// Edge-set variant (multiplicity one, edge or vertex connectivity sense).
std::vector<bool> minimalize_subgraph(const EmbeddedMultigraph& g,
                                      std::vector<bool> edge_mask,
                                      const RequirementMap& r, ConnMode mode);

}  // namespace ecp
