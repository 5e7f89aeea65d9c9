#pragma once

#include "ecp/connectivity.hpp"
#include "ecp/graph.hpp"

namespace ecp {

enum class OracleStatus { Optimal, Infeasible, Unknown };

struct OracleResult {
  OracleStatus status = OracleStatus::Unknown;
  Rational weight;
  MultiSolution solution;
  long long nodes_explored = 0;
};

struct OracleBudget {
  // k * |E| must stay within this many multiplicity slots.
  int max_slots = 36;
  long long max_nodes = 50'000'000;
};

/// Exhaustive branch and bound over multiplicity vectors in {0..k}^E.
/// Returns the optimum, an infeasibility verdict, or Unknown when the
/// budget is exceeded; never a wrong optimum. Among equal-weight optima the
/// lexicographically smallest multiplicity vector is returned.
OracleResult exact_solve(const EmbeddedMultigraph& g, const RequirementMap& r,
                         int k, const OracleBudget& budget = {});

/// All minimal feasible subgraphs (single-copy edge sets) under the given
/// connectivity sense: feasible, and removing any single edge breaks
/// feasibility. Requires edge count <= 16.
std::vector<std::vector<EdgeId>> enumerate_minimal(const EmbeddedMultigraph& g,
                                                   const RequirementMap& r,
                                                   ConnMode mode);

}  // namespace ecp
