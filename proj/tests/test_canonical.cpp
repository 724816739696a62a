#include <algorithm>
#include <random>

#include "doctest.h"
#include "theta/canonical.hpp"
#include "theta/families.hpp"
#include "theta/graph6.hpp"

using namespace theta;

namespace {

SimpleGraph permuted(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return SimpleGraph(g.vertex_count(), std::move(e));
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

// Oracle: decide isomorphism by checking every permutation.
bool isomorphic_brute_force(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("isomorphic inputs share a certificate") {
  std::mt19937_64 rng(61);
  SimpleGraph th = theta_hat(2, 2, 2);
  std::string cert = canonical_form(th).certificate;
  for (int trial = 0; trial < 50; ++trial) CHECK(canonical_form(permuted(th, rng)).certificate == cert);
  CHECK(canonical_form(theta_hat(1, 2, 2)).certificate != cert);
}

TEST_CASE("certificates classify isomorphism exactly on small graphs") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    SimpleGraph g = random_graph(rng, n, 0.45);
    SimpleGraph h = random_graph(rng, n, 0.45);
    bool same_cert = canonical_form(g).certificate == canonical_form(h).certificate;
    CHECK(same_cert == isomorphic_brute_force(g, h));
  }
}

TEST_CASE("permutation closure on a 10-vertex graph") {
  std::mt19937_64 rng(71);
  SimpleGraph g = random_graph(rng, 10, 0.4);
  std::string cert = canonical_form(g).certificate;
  for (int trial = 0; trial < 1000; ++trial)
    CHECK(canonical_form(permuted(g, rng)).certificate == cert);
}

TEST_CASE("certificate round-trips to an isomorph") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    SimpleGraph g = random_graph(rng, 9, 0.35);
    CanonicalGraph cg = canonical_form(g);
    SimpleGraph decoded = graph6_decode(cg.certificate);
    CHECK(decoded.edge_count() == g.edge_count());
    CHECK(canonical_form(decoded).certificate == cg.certificate);
    CHECK(decoded.edges() == cg.canonical_edge_list);
  }
}

TEST_CASE("handles regular and symmetric graphs") {
  // cycles are vertex-transitive; the search must still terminate and agree
  std::mt19937_64 rng(79);
  for (int n : {6, 9, 12}) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    SimpleGraph cyc(n, std::move(e));
    std::string cert = canonical_form(cyc).certificate;
    for (int trial = 0; trial < 10; ++trial) CHECK(canonical_form(permuted(cyc, rng)).certificate == cert);
  }
}
