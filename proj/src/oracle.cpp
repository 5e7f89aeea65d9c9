#include "ecp/oracle.hpp"

#include <algorithm>

namespace ecp {

namespace {

struct Searcher {
  const EmbeddedMultigraph& g;
  const RequirementMap& r;
  int k;
  const OracleBudget& budget;
  std::vector<Vertex> terminals;

  std::vector<int> current;
  Rational current_weight;
  bool have_best = false;
  Rational best_weight;
  std::vector<int> best;
  long long nodes = 0;
  bool aborted = false;

  Searcher(const EmbeddedMultigraph& gg, const RequirementMap& rr, int kk,
           const OracleBudget& bb)
      : g(gg), r(rr), k(kk), budget(bb), terminals(rr.terminals()) {}

  bool feasible(const std::vector<int>& mult) const {
    MultiSolution sol;
    sol.mult = mult;
    sol.k = k;
    return is_feasible(g, sol, r);
  }

  // Remaining edges at full multiplicity; used for the monotone prune.
  bool relaxation_feasible(int next_edge) {
    std::vector<int> relaxed = current;
    for (EdgeId e = next_edge; e < g.edge_count(); ++e) relaxed[e] = k;
    return feasible(relaxed);
  }

  void consider_leaf() {
    if (!feasible(current)) return;
    if (!have_best || current_weight < best_weight ||
        (current_weight == best_weight && current < best)) {
      have_best = true;
      best_weight = current_weight;
      best = current;
    }
  }

  void search(int edge) {
    if (aborted) return;
    if (++nodes > budget.max_nodes) {
      aborted = true;
      return;
    }
    if (have_best && best_weight < current_weight) return;
    if (edge == g.edge_count()) {
      consider_leaf();
      return;
    }
    if (!relaxation_feasible(edge)) return;
    for (int m = k; m >= 0; --m) {
      current[edge] = m;
      current_weight += g.weight(edge) * Rational(m);
      search(edge + 1);
      current_weight -= g.weight(edge) * Rational(m);
      current[edge] = 0;
      if (aborted) return;
    }
  }
};

}  // namespace

OracleResult exact_solve(const EmbeddedMultigraph& g, const RequirementMap& r,
                         int k, const OracleBudget& budget) {
  if (k < 1) throw GraphError("oracle needs k >= 1");
  OracleResult res;
  res.solution = MultiSolution(g.edge_count(), k);

  if (r.terminals().size() < 2) {
    res.status = OracleStatus::Optimal;
    res.weight = Rational(0);
    return res;
  }
  if (k * g.edge_count() > budget.max_slots) {
    res.status = OracleStatus::Unknown;
    return res;
  }

  Searcher s(g, r, k, budget);
  std::vector<int> full(g.edge_count(), k);
  if (!s.feasible(full)) {
    res.status = OracleStatus::Infeasible;
    res.nodes_explored = 1;
    return res;
  }
  s.current.assign(g.edge_count(), 0);
  s.search(0);
  res.nodes_explored = s.nodes;
  if (s.aborted) {
    res.status = OracleStatus::Unknown;
    return res;
  }
  res.status = OracleStatus::Optimal;
  res.weight = s.best_weight;
  res.solution.mult = s.best;
  return res;
}

std::vector<std::vector<EdgeId>> enumerate_minimal(const EmbeddedMultigraph& g,
                                                   const RequirementMap& r,
                                                   ConnMode mode) {
  const int m = g.edge_count();
  if (m > 16) throw GraphError("enumerate_minimal limited to 16 edges");
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> mask(m);
  // Feasibility is monotone, so a subset is minimal iff it is feasible and
  // every one-edge-smaller subset is not.
  std::vector<char> feas(1ul << m, 0);
  for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
    for (int e = 0; e < m; ++e) mask[e] = bits & (1ul << e);
    feas[bits] = is_feasible_subgraph(g, mask, r, mode) ? 1 : 0;
  }
  for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
    if (!feas[bits]) continue;
    bool minimal = true;
    for (int e = 0; e < m && minimal; ++e)
      if ((bits & (1ul << e)) && feas[bits ^ (1ul << e)]) minimal = false;
    if (!minimal) continue;
    std::vector<EdgeId> edges;
    for (int e = 0; e < m; ++e)
      if (bits & (1ul << e)) edges.push_back(e);
    out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace ecp
