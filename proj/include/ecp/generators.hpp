#pragma once

#include <random>

#include "ecp/graph.hpp"

namespace ecp {

using Rng = std::mt19937_64;

/// Deterministic fixture and random-instance generators. The artifact does
/// not implement planarity embedding of abstract graphs; every generator
/// emits an explicit rotation system instead.
namespace gen {

EmbeddedMultigraph path(int n);
EmbeddedMultigraph cycle(int n);
/// w columns by h rows; unit weights.
EmbeddedMultigraph grid(int w, int h);
/// Hub is vertex `rim`; rim vertices 0..rim-1.
EmbeddedMultigraph wheel(int rim);
EmbeddedMultigraph triangle();
EmbeddedMultigraph k4();
EmbeddedMultigraph octahedron();
/// Two degree-3 vertices (0 and 1) joined by three internally disjoint
/// routes: two length-2 paths and one direct edge.
EmbeddedMultigraph theta();
/// Two vertices joined by m parallel unit edges.
EmbeddedMultigraph parallel_edges(int m);

/// Stacked planar triangulation grown by repeated insertion of a vertex
/// into a uniformly random face. n >= 3. Unit weights.
EmbeddedMultigraph random_triangulation(int n, Rng& rng);

/// Connected random planar graph: random spanning tree of a random
/// triangulation plus each remaining edge with probability keep_prob.
EmbeddedMultigraph random_connected_planar(int n, double keep_prob, Rng& rng);

/// Rebuilds g with integer weights drawn uniformly from [lo, hi].
EmbeddedMultigraph with_random_weights(const EmbeddedMultigraph& g, Rng& rng,
                                       int lo, int hi);

/// Rebuilds g with the given weights (size must match edge count).
EmbeddedMultigraph with_weights(const EmbeddedMultigraph& g,
                                std::vector<Rational> weights);

/// Random requirements in {0..3}; when min_terminals > 0, re-rolls single
/// vertices until the positive support is at least that large.
RequirementMap random_requirements(int n, Rng& rng, int max_req,
                                   int min_terminals);

}  // namespace gen
}  // namespace ecp
