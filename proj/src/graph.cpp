#include "theta/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace theta {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw std::invalid_argument("SimpleGraph: endpoint out of range");
    if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("SimpleGraph: duplicate edge");
  edges_ = std::move(edges);
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

SignedCompleteGraph::SignedCompleteGraph(int n, SimpleGraph negative_edges)
    : n_(n), neg_(std::move(negative_edges)) {
  if (n < 1) throw std::invalid_argument("SignedCompleteGraph: order must be >= 1");
  if (neg_.vertex_count() != n)
    throw std::invalid_argument("SignedCompleteGraph: negative part must live on the same n vertices");
}

int SignedCompleteGraph::sign(int u, int v) const {
  if (u == v) return 0;
  return neg_.has_edge(u, v) ? -1 : 1;
}

IntMatrix adjacency_matrix(const SignedCompleteGraph& g) {
  const int n = g.order();
  IntMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = g.sign(i, j);
  return a;
}

int degree(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("degree: invalid vertex " + std::to_string(v));
  return static_cast<int>(g.neighbors(v).size());
}

std::vector<int> pendant_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (degree(g, v) == 1) out.push_back(v);
  return out;
}

namespace {

// BFS levels from a source set; unreached vertices get -1.
std::vector<int> bfs_levels(const SimpleGraph& g, const std::vector<int>& source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  for (int s : source) {
    if (s < 0 || s >= g.vertex_count()) throw std::out_of_range("bfs: invalid vertex");
    if (dist[s] != 0) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

std::optional<int> distance(const SimpleGraph& g, int u, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("distance: invalid vertex");
  auto dist = bfs_levels(g, {u});
  if (dist[v] < 0) return std::nullopt;
  return dist[v];
}

std::optional<int> diameter(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_levels(g, {v});
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<int> neighbors_at_distance(const SimpleGraph& g, const std::vector<int>& source, int r) {
  if (r < 0) throw std::invalid_argument("neighbors_at_distance: negative radius");
  auto dist = bfs_levels(g, source);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == r) out.push_back(v);
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_levels(g, {0});
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_bicyclic(const SimpleGraph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() + 1;
}

SimpleGraph base(const SimpleGraph& g) {
  if (!is_bicyclic(g)) throw std::invalid_argument("base: input is not bicyclic");
  std::vector<bool> alive(g.vertex_count(), true);
  std::vector<int> deg(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) deg[v] = degree(g, v);
  std::queue<int> pending;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[v] == 1) pending.push(v);
  while (!pending.empty()) {
    int v = pending.front();
    pending.pop();
    if (!alive[v] || deg[v] != 1) continue;
    alive[v] = false;
    for (int w : g.neighbors(v))
      if (alive[w] && --deg[w] == 1) pending.push(w);
  }
  std::vector<int> relabel(g.vertex_count(), -1);
  int m = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (alive[v]) relabel[v] = m++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (alive[u] && alive[v]) edges.emplace_back(relabel[u], relabel[v]);
  return SimpleGraph(m, std::move(edges));
}

namespace {

// Walks the closed trail induced by an edge subset where every vertex has
// degree 2; returns the vertex sequence or nullopt when the subset is not a
// single simple cycle.
std::optional<std::vector<int>> trace_cycle(const SimpleGraph& g, const std::vector<Edge>& edge_set) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [u, v] : edge_set) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int start = -1, on_cycle = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (adj[v].empty()) continue;
    if (adj[v].size() != 2) return std::nullopt;
    ++on_cycle;
    if (start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<int> seq{start};
  int prev = -1, cur = start;
  while (true) {
    int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
    if (next == start) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(seq.size()) != on_cycle) return std::nullopt;  // two disjoint cycles
  return seq;
}

}  // namespace

CycleList induced_cycles(const SimpleGraph& g) {
  SimpleGraph b = base(g);
  // Spanning tree via BFS; the two non-tree edges close the fundamental
  // cycles, and their symmetric difference is the third cycle iff it is a
  // single closed walk (theta base) rather than two disjoint ones (dumbbell).
  std::vector<int> parent(b.vertex_count(), -1);
  std::vector<bool> seen(b.vertex_count(), false);
  std::vector<Edge> non_tree;
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  std::vector<Edge> tree;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : b.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        tree.emplace_back(std::min(v, w), std::max(v, w));
        q.push(w);
      }
    }
  }
  for (const auto& e : b.edges())
    if (std::find(tree.begin(), tree.end(), e) == tree.end()) non_tree.push_back(e);
  if (non_tree.size() != 2) throw std::logic_error("induced_cycles: base is not bicyclic");

  auto fundamental = [&](const Edge& e) {
    // Path u..root and v..root, xor of the two paths plus e.
    auto path_to_root = [&](int v) {
      std::vector<int> p{v};
      while (parent[p.back()] >= 0) p.push_back(parent[p.back()]);
      return p;
    };
    std::vector<int> pu = path_to_root(e.first), pv = path_to_root(e.second);
    std::vector<bool> inu(b.vertex_count(), false);
    for (int x : pu) inu[x] = true;
    int meet = -1;
    for (int x : pv)
      if (inu[x]) {
        meet = x;
        break;
      }
    std::vector<Edge> cyc{{e}};
    for (std::size_t i = 0; i + 1 < pu.size() && pu[i] != meet; ++i)
      cyc.emplace_back(std::min(pu[i], pu[i + 1]), std::max(pu[i], pu[i + 1]));
    for (std::size_t i = 0; i + 1 < pv.size() && pv[i] != meet; ++i)
      cyc.emplace_back(std::min(pv[i], pv[i + 1]), std::max(pv[i], pv[i + 1]));
    return cyc;
  };

  std::vector<Edge> c1 = fundamental(non_tree[0]);
  std::vector<Edge> c2 = fundamental(non_tree[1]);
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  std::vector<Edge> c3;
  std::set_symmetric_difference(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(c3));

  CycleList out;
  for (const auto& edge_set : {c1, c2, c3})
    if (auto seq = trace_cycle(b, edge_set)) out.cycles.push_back(*seq);
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& a, const auto& b2) { return a.size() != b2.size() ? a.size() < b2.size() : a < b2; });
  return out;
}

int cycle_sign(const SignedCompleteGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("cycle_sign: cycle needs at least 3 vertices");
  std::vector<bool> seen(g.order(), false);
  for (int v : cycle) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle_sign: vertex out of range");
    if (seen[v]) throw std::invalid_argument("cycle_sign: repeated vertex");
    seen[v] = true;
  }
  int s = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) s *= g.sign(cycle[i], cycle[(i + 1) % cycle.size()]);
  return s;
}

bool is_balanced(const SignedCompleteGraph& g) {
  // A signed K_n is balanced iff the vertices split into two sides with the
  // negative edges exactly the pairs across. Color by the negative edges at
  // vertex 0, then verify every pair in O(n^2).
  const int n = g.order();
  std::vector<int> side(n, 0);
  for (int v = 1; v < n; ++v) side[v] = g.sign(0, v) < 0 ? 1 : 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool cross = side[u] != side[v];
      if (cross != (g.sign(u, v) < 0)) return false;
    }
  return true;
}

std::pair<SimpleGraph, std::vector<int>> drop_isolated(const SimpleGraph& g) {
  std::vector<int> keep;
  std::vector<int> relabel(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (degree(g, v) > 0) {
      relabel[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(relabel[u], relabel[v]);
  return {SimpleGraph(static_cast<int>(keep.size()), std::move(edges)), keep};
}

}  // namespace theta
