#include "ecp/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace ecp {

namespace {

// Dinic-style max flow on small integer networks.
struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;  // index of the reverse arc in adj[to]
  };
  std::vector<std::vector<Arc>> adj;
  explicit FlowNet(int n) : adj(n) {}

  void add_arc(int u, int v, int cap_uv, int cap_vu) {
    adj[u].push_back({v, cap_uv, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, cap_vu, static_cast<int>(adj[u].size()) - 1});
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> level(adj.size()), it(adj.size());
    auto bfs = [&]() {
      std::fill(level.begin(), level.end(), -1);
      std::queue<int> q;
      level[s] = 0;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const Arc& a : adj[u])
          if (a.cap > 0 && level[a.to] == -1) {
            level[a.to] = level[u] + 1;
            q.push(a.to);
          }
      }
      return level[t] != -1;
    };
    std::function<int(int, int)> dfs = [&](int u, int pushed) -> int {
      if (u == t) return pushed;
      for (int& i = it[u]; i < static_cast<int>(adj[u].size()); ++i) {
        Arc& a = adj[u][i];
        if (a.cap > 0 && level[a.to] == level[u] + 1) {
          int got = dfs(a.to, std::min(pushed, a.cap));
          if (got > 0) {
            a.cap -= got;
            adj[a.to][a.rev].cap += got;
            return got;
          }
        }
      }
      return 0;
    };
    while (flow < limit && bfs()) {
      std::fill(it.begin(), it.end(), 0);
      int pushed;
      while (flow < limit && (pushed = dfs(s, limit - flow)) > 0) flow += pushed;
    }
    return flow;
  }
};

constexpr int kFlowLimit = 1 << 20;

int edge_conn_impl(const EmbeddedMultigraph& g, const std::vector<int>& mult,
                   Vertex u, Vertex v) {
  if (u == v) throw GraphError("edge connectivity query with u == v");
  FlowNet net(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (mult[e] > 0) net.add_arc(g.edge(e).u, g.edge(e).v, mult[e], mult[e]);
  return net.max_flow(u, v, kFlowLimit);
}

int vertex_conn_impl(const EmbeddedMultigraph& g, const std::vector<int>& mult,
                     Vertex u, Vertex v) {
  if (u == v) throw GraphError("vertex connectivity query with u == v");
  // Split w into w_in = 2w, w_out = 2w+1 with capacity 1 (unbounded at the
  // query endpoints).
  const int n = g.vertex_count();
  FlowNet net(2 * n);
  for (Vertex w = 0; w < n; ++w) {
    int cap = (w == u || w == v) ? kFlowLimit : 1;
    net.add_arc(2 * w, 2 * w + 1, cap, 0);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mult[e] == 0) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    net.add_arc(2 * a + 1, 2 * b, mult[e], 0);
    net.add_arc(2 * b + 1, 2 * a, mult[e], 0);
  }
  return net.max_flow(2 * u + 1, 2 * v, kFlowLimit);
}

std::vector<int> unit_mults(const EmbeddedMultigraph& g) {
  return std::vector<int>(g.edge_count(), 1);
}

std::vector<int> mask_mults(const std::vector<bool>& mask) {
  std::vector<int> m(mask.size(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i) m[i] = mask[i] ? 1 : 0;
  return m;
}

bool feasible_mults(const EmbeddedMultigraph& g, const std::vector<int>& mult,
                    const RequirementMap& r, ConnMode mode,
                    std::pair<Vertex, Vertex>* witness = nullptr) {
  std::vector<Vertex> q = r.terminals();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      int need = std::min(r(q[i]), r(q[j]));
      int have = mode == ConnMode::Edge
                     ? edge_conn_impl(g, mult, q[i], q[j])
                     : vertex_conn_impl(g, mult, q[i], q[j]);
      if (have < need) {
        if (witness) *witness = {q[i], q[j]};
        return false;
      }
    }
  return true;
}

std::vector<int> minimalize_mults(const EmbeddedMultigraph& g,
                                  std::vector<int> mult,
                                  const RequirementMap& r, ConnMode mode) {
  if (!feasible_mults(g, mult, r, mode))
    throw GraphError("minimalize requires a feasible input solution");
  // Nonincreasing weight, ties by edge id.
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return g.weight(b) < g.weight(a);
  });
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e : order) {
      while (mult[e] > 0) {
        --mult[e];
        if (feasible_mults(g, mult, r, mode)) {
          changed = true;
        } else {
          ++mult[e];
          break;
        }
      }
    }
  }
  return mult;
}

}  // namespace

int edge_connectivity(const EmbeddedMultigraph& g, const MultiSolution& sol,
                      Vertex u, Vertex v) {
  return edge_conn_impl(g, sol.mult, u, v);
}

int edge_connectivity(const EmbeddedMultigraph& g, Vertex u, Vertex v) {
  return edge_conn_impl(g, unit_mults(g), u, v);
}

int vertex_connectivity(const EmbeddedMultigraph& g, Vertex u, Vertex v) {
  return vertex_conn_impl(g, unit_mults(g), u, v);
}

int vertex_connectivity(const EmbeddedMultigraph& g, const MultiSolution& sol,
                        Vertex u, Vertex v) {
  return vertex_conn_impl(g, sol.mult, u, v);
}

bool is_feasible(const EmbeddedMultigraph& g, const MultiSolution& sol,
                 const RequirementMap& r) {
  return feasible_mults(g, sol.mult, r, ConnMode::Edge);
}

std::pair<Vertex, Vertex> first_violation(const EmbeddedMultigraph& g,
                                          const MultiSolution& sol,
                                          const RequirementMap& r) {
  std::pair<Vertex, Vertex> w{-1, -1};
  feasible_mults(g, sol.mult, r, ConnMode::Edge, &w);
  return w;
}

bool is_feasible_subgraph(const EmbeddedMultigraph& g,
                          const std::vector<bool>& edge_mask,
                          const RequirementMap& r, ConnMode mode) {
  return feasible_mults(g, mask_mults(edge_mask), r, mode);
}

MultiSolution minimalize(const EmbeddedMultigraph& g, const MultiSolution& sol,
                         const RequirementMap& r) {
  MultiSolution out = sol;
  out.mult = minimalize_mults(g, sol.mult, r, ConnMode::Edge);
  return out;
}

std::vector<bool> minimalize_subgraph(const EmbeddedMultigraph& g,
                                      std::vector<bool> edge_mask,
                                      const RequirementMap& r, ConnMode mode) {
  std::vector<int> mult = minimalize_mults(g, mask_mults(edge_mask), r, mode);
  for (std::size_t i = 0; i < edge_mask.size(); ++i) edge_mask[i] = mult[i] > 0;
  return edge_mask;
}

}  // namespace ecp
