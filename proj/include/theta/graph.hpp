#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "theta/intmatrix.hpp"

namespace theta {

using Edge = std::pair<int, int>;  // unordered, normalized to first < second

/// Undirected simple graph on dense 0-based vertex indices. Immutable after
/// construction; copies are cheap enough at the orders this project handles.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  bool has_edge(int u, int v) const;

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, u < v
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Signed complete graph of order n: every pair is an edge, negative exactly
/// on the edge set of `negative_edges` (which lives on the same n vertices).
class SignedCompleteGraph {
 public:
  SignedCompleteGraph(int n, SimpleGraph negative_edges);

  int order() const { return n_; }
  const SimpleGraph& negative_part() const { return neg_; }
  /// +1, -1 for vertex pairs; 0 on the diagonal.
  int sign(int u, int v) const;

 private:
  int n_;
  SimpleGraph neg_;
};

struct CycleList {
  std::vector<std::vector<int>> cycles;  // each a closed vertex sequence (first != last, wraps)
};

IntMatrix adjacency_matrix(const SignedCompleteGraph& g);

int degree(const SimpleGraph& g, int v);
std::vector<int> pendant_vertices(const SimpleGraph& g);

/// BFS distance; std::nullopt when unreachable.
std::optional<int> distance(const SimpleGraph& g, int u, int v);
/// Max pairwise distance; std::nullopt when disconnected (or empty).
std::optional<int> diameter(const SimpleGraph& g);
/// Vertices at BFS distance exactly r from the set S.
std::vector<int> neighbors_at_distance(const SimpleGraph& g, const std::vector<int>& source, int r);

bool is_connected(const SimpleGraph& g);
bool is_bicyclic(const SimpleGraph& g);  // connected and |E| = |V| + 1

/// Strips pendant vertices until none remain; surviving vertices are
/// compacted to dense indices. Requires is_bicyclic(g).
SimpleGraph base(const SimpleGraph& g);

/// The 3 cycles of a theta base or the 2 cycles of a dumbbell base, computed
/// on base(g).
CycleList induced_cycles(const SimpleGraph& g);

int cycle_sign(const SignedCompleteGraph& g, const std::vector<int>& cycle);
bool is_balanced(const SignedCompleteGraph& g);

/// Drops isolated vertices, compacting labels; returns the subgraph and the
/// old-vertex list (new index -> old index).
std::pair<SimpleGraph, std::vector<int>> drop_isolated(const SimpleGraph& g);

}  // namespace theta
