#include "theta/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "theta/graph6.hpp"

namespace theta {

std::vector<std::vector<int>> rooted_trees(int m) {
  if (m < 1) throw std::invalid_argument("rooted_trees: need m >= 1");
  std::vector<std::vector<int>> out;
  if (m == 1) {
    out.push_back({-1});
    return out;
  }
  // Beyer-Hedetniemi: canonical level sequences in decreasing lexicographic
  // order, from the path (1,2,...,m) down to the star (1,2,2,...,2).
  std::vector<int> level(m);
  for (int i = 0; i < m; ++i) level[i] = i + 1;
  auto emit = [&]() {
    std::vector<int> parent(m, -1);
    for (int i = 1; i < m; ++i) {
      for (int j = i - 1; j >= 0; --j)
        if (level[j] == level[i] - 1) {
          parent[i] = j;
          break;
        }
    }
    out.push_back(std::move(parent));
  };
  emit();
  while (true) {
    int p = -1;
    for (int i = m - 1; i >= 0; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level[i] == level[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < m; ++i) level[i] = level[i - (p - q)];
    emit();
  }
  return out;
}

namespace {

// A base plus one rooted tree hanging at every base vertex (tree of size 1 =
// just the base vertex). Sizes sum to v.
void attach_forests(const SimpleGraph& base_graph, int v,
                    const std::vector<std::vector<std::vector<int>>>& trees_by_size,
                    std::set<std::string>& certs) {
  const int b = base_graph.vertex_count();
  std::vector<int> sizes(b, 1);
  std::vector<Edge> base_edges = base_graph.edges();

  // Enumerate size compositions recursively, then tree shapes per slot.
  std::function<void(int, int)> compose = [&](int slot, int remaining) {
    if (slot == b) {
      if (remaining != 0) return;
      std::vector<int> shape_index(b, 0);
      std::function<void(int)> pick = [&](int i) {
        if (i == b) {
          std::vector<Edge> edges = base_edges;
          int next = b;
          for (int r = 0; r < b; ++r) {
            const auto& parent = trees_by_size[sizes[r]][shape_index[r]];
            // tree vertex 0 is the base vertex r; the rest get fresh labels
            std::vector<int> label(sizes[r]);
            label[0] = r;
            for (int x = 1; x < sizes[r]; ++x) label[x] = next++;
            for (int x = 1; x < sizes[r]; ++x) edges.emplace_back(label[parent[x]], label[x]);
          }
          certs.insert(canonical_form(SimpleGraph(v, std::move(edges))).certificate);
          return;
        }
        for (std::size_t si = 0; si < trees_by_size[sizes[i]].size(); ++si) {
          shape_index[i] = static_cast<int>(si);
          pick(i + 1);
        }
      };
      pick(0);
      return;
    }
    for (int sz = 1; sz <= remaining - (b - slot - 1); ++sz) {
      sizes[slot] = sz;
      compose(slot + 1, remaining - sz);
    }
  };
  compose(0, v);
}

SimpleGraph make_theta_base(int a, int b, int c) {
  // Hubs 0 and 1 joined by internally disjoint paths of lengths a, b, c.
  const int n = a + b + c - 1;
  std::vector<Edge> edges;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph make_dumbbell_base(int p, int q, int bridge) {
  // Cycle of length p, cycle of length q, joined at one vertex (bridge == 0)
  // or by a path with `bridge` edges.
  std::vector<Edge> edges;
  int next = 0;
  auto add_cycle = [&](int len, int anchor) {
    // anchor < 0: allocate all vertices fresh, return the first
    int first = anchor >= 0 ? anchor : next++;
    int prev = first;
    for (int i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, first);
    return first;
  };
  int a1 = add_cycle(p, -1);
  int joint2;
  if (bridge == 0) {
    joint2 = a1;
  } else {
    int prev = a1;
    for (int i = 0; i < bridge; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    joint2 = prev;
  }
  add_cycle(q, joint2);
  return SimpleGraph(next, std::move(edges));
}

}  // namespace

std::vector<std::string> enumerate_bicyclic_certificates(int v) {
  if (v < 4) throw std::invalid_argument("enumerate_bicyclic: need v >= 4");
  std::vector<std::vector<std::vector<int>>> trees_by_size(v + 1);
  for (int m = 1; m <= v; ++m) trees_by_size[m] = rooted_trees(m);

  std::set<std::string> certs;
  // Theta bases: 1 <= a <= b <= c, b >= 2, a+b+c-1 <= v.
  for (int a = 1; a + 2 * std::max(a, 2) - 1 <= v; ++a)
    for (int b = std::max(a, 2); a + 2 * b - 1 <= v; ++b)
      for (int c = b; a + b + c - 1 <= v; ++c)
        attach_forests(make_theta_base(a, b, c), v, trees_by_size, certs);
  // Dumbbell bases: cycles p <= q, bridge length >= 0.
  for (int p = 3; 2 * p - 1 <= v; ++p)
    for (int q = p; p + q - 1 <= v; ++q)
      for (int bridge = 0; (bridge == 0 ? p + q - 1 : p + q + bridge - 1) <= v; ++bridge)
        attach_forests(make_dumbbell_base(p, q, bridge), v, trees_by_size, certs);
  return {certs.begin(), certs.end()};
}

void enumerate_bicyclic(int v, const std::function<void(const CanonicalGraph&)>& yield) {
  for (const auto& cert : enumerate_bicyclic_certificates(v)) {
    CanonicalGraph cg;
    cg.graph = graph6_decode(cert);
    cg.certificate = cert;
    cg.canonical_edge_list = cg.graph.edges();
    yield(cg);
  }
}

SignedCompleteGraph embed(const SimpleGraph& b, int n) {
  if (n < b.vertex_count()) throw std::invalid_argument("embed: order too small for the negative part");
  return SignedCompleteGraph(n, SimpleGraph(n, b.edges()));
}

}  // namespace theta
