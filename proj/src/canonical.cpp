#include "theta/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "theta/graph6.hpp"

namespace theta {

namespace {

struct BitGraph {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};
};

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by neighbor counts into every other
// cell until stable. Group keys are sorted ascending, which makes the result
// label-invariant.
void refine(const BitGraph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      std::uint64_t smask = 0;
      for (int v : cells[si]) smask |= (1ull << v);
      for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (cells[ci].size() <= 1) continue;
        int key0 = std::popcount(g.adj[cells[ci][0]] & smask);
        bool uniform = true;
        for (int v : cells[ci])
          if (std::popcount(g.adj[v] & smask) != key0) {
            uniform = false;
            break;
          }
        if (uniform) continue;
        std::vector<std::pair<int, int>> keyed;  // (key, vertex)
        keyed.reserve(cells[ci].size());
        for (int v : cells[ci]) keyed.emplace_back(std::popcount(g.adj[v] & smask), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Cells pieces;
        for (const auto& [key, v] : keyed) {
          if (pieces.empty() || std::popcount(g.adj[pieces.back()[0]] & smask) != key)
            pieces.emplace_back();
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + ci);
        cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }
}

std::string certificate_of_labeling(const BitGraph& g, const std::vector<int>& label_to_vertex) {
  const int n = g.n;
  std::vector<Edge> edges;
  std::vector<int> vertex_to_label(n);
  for (int i = 0; i < n; ++i) vertex_to_label[label_to_vertex[i]] = i;
  for (int v = 0; v < n; ++v) {
    std::uint64_t m = g.adj[v];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      if (v < w) edges.emplace_back(std::min(vertex_to_label[v], vertex_to_label[w]),
                                    std::max(vertex_to_label[v], vertex_to_label[w]));
    }
  }
  return graph6_encode(SimpleGraph(n, std::move(edges)));
}

void search(const BitGraph& g, Cells cells, std::string& best) {
  refine(g, cells);
  std::size_t branch = cells.size();
  std::size_t branch_size = SIZE_MAX;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1 && cells[i].size() < branch_size) {
      branch = i;
      branch_size = cells[i].size();
    }
  if (branch == cells.size()) {
    std::vector<int> labeling(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) labeling[i] = cells[i][0];
    std::string cert = certificate_of_labeling(g, labeling);
    if (best.empty() || cert < best) best = std::move(cert);
    return;
  }
  for (int v : cells[branch]) {
    Cells child = cells;
    std::vector<int> rest;
    for (int w : cells[branch])
      if (w != v) rest.push_back(w);
    child[branch] = {v};
    child.insert(child.begin() + branch + 1, std::move(rest));
    search(g, std::move(child), best);
  }
}

}  // namespace

CanonicalGraph canonical_form(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("canonical_form: supports at most 64 vertices");
  BitGraph bg;
  bg.n = n;
  for (const auto& [u, v] : g.edges()) {
    bg.adj[u] |= (1ull << v);
    bg.adj[v] |= (1ull << u);
  }
  std::string best;
  if (n == 0) {
    best = graph6_encode(g);
  } else {
    Cells cells(1);
    cells[0].resize(n);
    for (int i = 0; i < n; ++i) cells[0][i] = i;
    search(bg, std::move(cells), best);
  }
  CanonicalGraph out;
  out.graph = g;
  out.certificate = best;
  out.canonical_edge_list = graph6_decode(best).edges();
  return out;
}

}  // namespace theta
