#include "ecp/steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace ecp {

namespace {

struct QueueItem {
  Rational dist;
  Vertex v;
  bool operator>(const QueueItem& o) const {
    if (dist != o.dist) return o.dist < dist;
    return v > o.v;
  }
};

}  // namespace

std::vector<EdgeId> ShortestPaths::path_to(Vertex v) const {
  std::vector<EdgeId> out;
  while (parent[v] != -1) {
    out.push_back(parent_edge[v]);
    v = parent[v];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ShortestPaths dijkstra(const EmbeddedMultigraph& g, Vertex source,
                       const std::vector<bool>* edge_mask) {
  const int n = g.vertex_count();
  ShortestPaths sp;
  sp.dist.assign(n, Rational(0));
  sp.parent.assign(n, -1);
  sp.parent_edge.assign(n, -1);
  sp.reached.assign(n, false);

  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> pq;
  sp.dist[source] = Rational(0);
  sp.reached[source] = true;
  pq.push({Rational(0), source});
  std::vector<bool> done(n, false);

  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (done[v] || sp.dist[v] != d) continue;
    done[v] = true;
    for (DartId dart : g.rotation(v)) {
      EdgeId e = edge_of_dart(dart);
      if (edge_mask && !(*edge_mask)[e]) continue;
      Vertex w = g.head(dart);
      Rational nd = d + g.weight(e);
      bool better = !sp.reached[w] || nd < sp.dist[w];
      bool tie = sp.reached[w] && nd == sp.dist[w] &&
                 (v < sp.parent[w] || (v == sp.parent[w] && e < sp.parent_edge[w]));
      if (better || tie) {
        sp.dist[w] = nd;
        sp.parent[w] = v;
        sp.parent_edge[w] = e;
        sp.reached[w] = true;
        if (better) pq.push({nd, w});
      }
    }
  }
  return sp;
}

Rational edge_set_weight(const EmbeddedMultigraph& g,
                         const std::vector<EdgeId>& edges) {
  Rational w;
  for (EdgeId e : edges) w += g.weight(e);
  return w;
}

namespace {

// Kruskal MST of the subgraph given by `edges`, then repeated pruning of
// non-terminal leaves. Keeps the result a tree spanning the terminals.
std::vector<EdgeId> prune_to_tree(const EmbeddedMultigraph& g,
                                  std::vector<EdgeId> edges,
                                  const std::vector<Vertex>& terminals) {
  std::sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) {
    if (g.weight(a) != g.weight(b)) return g.weight(a) < g.weight(b);
    return a < b;
  });
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<EdgeId> tree;
  for (EdgeId e : edges) {
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(e);
  }
  std::vector<bool> is_terminal(g.vertex_count(), false);
  for (Vertex t : terminals) is_terminal[t] = true;
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : tree) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    std::vector<EdgeId> kept;
    for (EdgeId e : tree) {
      Vertex a = g.edge(e).u, b = g.edge(e).v;
      if ((deg[a] == 1 && !is_terminal[a]) || (deg[b] == 1 && !is_terminal[b])) {
        pruned = true;
      } else {
        kept.push_back(e);
      }
    }
    tree = std::move(kept);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace

std::vector<EdgeId> approx_steiner(const EmbeddedMultigraph& g,
                                   const std::vector<Vertex>& terminals) {
  if (terminals.empty()) throw GraphError("approx_steiner with no terminals");
  std::vector<Vertex> q = terminals;
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  if (q.size() == 1) return {};

  std::map<Vertex, ShortestPaths> sp;
  for (Vertex t : q) sp.emplace(t, dijkstra(g, t));
  for (Vertex t : q)
    for (Vertex s : q)
      if (!sp.at(t).reached[s])
        throw GraphError("terminals are not connected");

  // Prim over the metric closure, deterministic by (dist, endpoint ids).
  std::set<Vertex> in_tree{q[0]};
  std::vector<std::pair<Vertex, Vertex>> closure_edges;
  while (in_tree.size() < q.size()) {
    Rational best;
    Vertex bu = -1, bv = -1;
    for (Vertex a : in_tree)
      for (Vertex b : q) {
        if (in_tree.count(b)) continue;
        Rational d = sp.at(a).dist[b];
        if (bu == -1 || d < best ||
            (d == best && std::pair(a, b) < std::pair(bu, bv))) {
          best = d;
          bu = a;
          bv = b;
        }
      }
    closure_edges.emplace_back(bu, bv);
    in_tree.insert(bv);
  }

  std::set<EdgeId> chosen;
  for (auto [a, b] : closure_edges) {
    Vertex root = std::min(a, b), far = std::max(a, b);
    for (EdgeId e : sp.at(root).path_to(far)) chosen.insert(e);
  }
  return prune_to_tree(g, {chosen.begin(), chosen.end()}, q);
}

std::vector<EdgeId> exact_steiner(const EmbeddedMultigraph& g,
                                  const std::vector<Vertex>& terminals,
                                  int cap,
                                  const std::vector<bool>* edge_mask) {
  std::vector<Vertex> q = terminals;
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  if (q.empty()) throw GraphError("exact_steiner with no terminals");
  if (static_cast<int>(q.size()) > cap)
    throw GraphError("exact_steiner terminal cap exceeded");
  if (q.size() == 1) return {};

  const int n = g.vertex_count();
  const int t = static_cast<int>(q.size());

  std::vector<ShortestPaths> sp(n);
  for (Vertex v = 0; v < n; ++v) sp[v] = dijkstra(g, v, edge_mask);
  for (Vertex a : q)
    for (Vertex b : q)
      if (!sp[a].reached[b]) throw GraphError("terminals are not connected");

  const Rational INF(INT64_MAX / 4);
  auto reachable = [&](Vertex a, Vertex b) { return sp[a].reached[b]; };
  auto dist = [&](Vertex a, Vertex b) {
    return reachable(a, b) ? sp[a].dist[b] : INF;
  };

  // dp[S][v]: min weight connecting terminal subset S and vertex v.
  // back[S][v]: merge split T (with via == -1) or via vertex u.
  struct Back {
    int split = 0;
    Vertex via = -1;
  };
  std::vector<std::vector<Rational>> dp(1 << t,
                                        std::vector<Rational>(n, INF));
  std::vector<std::vector<Back>> back(1 << t, std::vector<Back>(n));

  for (int i = 0; i < t; ++i)
    for (Vertex v = 0; v < n; ++v) {
      dp[1 << i][v] = dist(q[i], v);
      back[1 << i][v] = {0, -1};
    }

  for (int S = 1; S < (1 << t); ++S) {
    if (!(S & (S - 1))) continue;  // singleton
    int low = S & (-S);
    std::vector<Rational>& row = dp[S];
    // Merge two sub-trees at v. Iterate T containing the lowest bit.
    for (int T = (S - 1) & S; T > 0; T = (T - 1) & S) {
      if (!(T & low)) continue;
      int U = S ^ T;
      for (Vertex v = 0; v < n; ++v) {
        if (dp[T][v] == INF || dp[U][v] == INF) continue;
        Rational cand = dp[T][v] + dp[U][v];
        if (cand < row[v]) {
          row[v] = cand;
          back[S][v] = {T, -1};
        }
      }
    }
    // Then relax along shortest paths: dp[S][v] = min_u dp[S][u] + d(u,v).
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u = 0; u < n; ++u) {
        if (dp[S][u] == INF || u == v || !reachable(u, v)) continue;
        Rational cand = dp[S][u] + dist(u, v);
        if (cand < row[v]) {
          row[v] = cand;
          back[S][v] = {0, u};
        }
      }
    }
  }

  // Reconstruct the edge set.
  std::set<EdgeId> edges;
  std::function<void(int, Vertex)> rebuild = [&](int S, Vertex v) {
    if (!(S & (S - 1))) {
      int i = std::countr_zero(static_cast<unsigned>(S));
      for (EdgeId e : sp[q[i]].path_to(v)) edges.insert(e);
      return;
    }
    const Back& b = back[S][v];
    if (b.via != -1) {
      for (EdgeId e : sp[b.via].path_to(v)) edges.insert(e);
      rebuild(S, b.via);
    } else {
      rebuild(b.split, v);
      rebuild(S ^ b.split, v);
    }
  };
  int full = (1 << t) - 1;
  rebuild(full, q[0]);
  return prune_to_tree(g, {edges.begin(), edges.end()}, q);
}

bool is_steiner_tree(const EmbeddedMultigraph& g,
                     const std::vector<EdgeId>& edges,
                     const std::vector<Vertex>& terminals) {
  std::vector<Vertex> q = terminals;
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  if (edges.empty()) return q.size() <= 1;

  std::map<Vertex, int> comp;
  int next = 0;
  std::vector<int> parent;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id_of = [&](Vertex v) {
    auto it = comp.find(v);
    if (it != comp.end()) return it->second;
    comp[v] = next++;
    parent.push_back(static_cast<int>(parent.size()));
    return comp[v];
  };
  for (EdgeId e : edges) {
    int a = find(id_of(g.edge(e).u)), b = find(id_of(g.edge(e).v));
    if (a == b) return false;  // cycle
    parent[a] = b;
  }
  for (Vertex v : q)
    if (!comp.count(v)) return false;
  int root = find(comp[q[0]]);
  for (Vertex v : q)
    if (find(comp[v]) != root) return false;
  return true;
}

}  // namespace ecp
