#include <algorithm>
#include <random>

#include "doctest.h"
#include "theta/canonical.hpp"
#include "theta/families.hpp"
#include "theta/graph.hpp"

using namespace theta;

namespace {

SimpleGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph random_negative_part(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

// Balance oracle: every triangle carries an even number of negative edges.
bool balanced_by_triangles(const SignedCompleteGraph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int negs = (g.sign(a, b) < 0) + (g.sign(b, c) < 0) + (g.sign(a, c) < 0);
        if (negs % 2 == 1) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("SimpleGraph invariants") {
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  SimpleGraph g(3, {{2, 0}, {0, 1}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("adjacency_matrix") {
  SignedCompleteGraph k2(2, SimpleGraph(2));
  IntMatrix a2 = adjacency_matrix(k2);
  CHECK(a2.at(0, 1) == 1);
  CHECK(a2.at(0, 0) == 0);

  SignedCompleteGraph g3(3, SimpleGraph(3, {{0, 1}}));
  IntMatrix a3 = adjacency_matrix(g3);
  CHECK(a3.at(0, 1) == -1);
  CHECK(a3.at(1, 0) == -1);
  CHECK(a3.at(0, 2) == 1);
  CHECK(a3.at(1, 2) == 1);

  // theta_hat(1,2,2) on vertices 0..3 inside K_6, expanded directly from the
  // sign definition as a second path.
  SimpleGraph b = theta_hat(1, 2, 2);
  SignedCompleteGraph g6(6, SimpleGraph(6, b.edges()));
  IntMatrix a6 = adjacency_matrix(g6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      bool neg = i < 4 && j < 4 && b.has_edge(i, j);
      int expect = i == j ? 0 : (neg ? -1 : 1);
      CHECK(a6.at(i, j) == expect);
    }
}

TEST_CASE("adjacency matrix symmetry and negative count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    SignedCompleteGraph g(n, random_negative_part(rng, n, 0.4));
    IntMatrix a = adjacency_matrix(g);
    CHECK(a.is_symmetric());
    int negs = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(a.at(i, i) == 0);
      for (int j = 0; j < n; ++j)
        if (a.at(i, j) == -1) ++negs;
    }
    CHECK(negs == 2 * g.negative_part().edge_count());
  }
}

TEST_CASE("degree and pendants") {
  SimpleGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(degree(star, 0) == 4);
  CHECK(pendant_vertices(star) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(degree(star, 9), std::out_of_range);
  CHECK(pendant_vertices(theta_hat(1, 2, 2)).empty());

  auto g = theta2(12, 8);  // three pendants at v2
  auto pend = pendant_vertices(g.negative_part());
  CHECK(pend.size() == 3);
  for (int v : pend) CHECK(g.negative_part().neighbors(v) == std::vector<int>{1});
}

TEST_CASE("distance, diameter, neighborhoods") {
  SimpleGraph p4 = path(4);
  CHECK(distance(p4, 0, 3) == 3);
  CHECK(distance(p4, 2, 2) == 0);
  CHECK(diameter(p4) == 3);

  SimpleGraph two(2);
  CHECK(!distance(two, 0, 1).has_value());
  CHECK(!diameter(two).has_value());

  SimpleGraph th = theta_hat(2, 2, 2);
  CHECK(diameter(th) == 2);
  // brute-force all-pairs check
  int best = 0;
  for (int u = 0; u < th.vertex_count(); ++u)
    for (int v = 0; v < th.vertex_count(); ++v) best = std::max(best, distance(th, u, v).value());
  CHECK(best == 2);

  CHECK(neighbors_at_distance(p4, {0}, 2) == std::vector<int>{2});
  CHECK(neighbors_at_distance(p4, {0, 3}, 1) == std::vector<int>{1, 2});
}

TEST_CASE("is_connected / is_bicyclic") {
  CHECK_FALSE(is_bicyclic(path(5)));
  CHECK(is_bicyclic(theta_hat(1, 2, 2)));
  SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_connected(two_triangles));
  CHECK_FALSE(is_bicyclic(two_triangles));
}

TEST_CASE("base strips pendants") {
  SimpleGraph th = theta_hat(2, 2, 2);
  CHECK(base(th) == th);

  auto g = theta1(13, 2, 3);
  auto [support, labels] = drop_isolated(g.negative_part());
  (void)labels;
  SimpleGraph b = base(support);
  CHECK(b.vertex_count() == 5);
  CHECK(b.edge_count() == 6);
  CHECK(canonical_form(b).certificate == canonical_form(th).certificate);
  CHECK(base(b) == b);  // idempotent
  CHECK(b.edge_count() == b.vertex_count() + 1);

  // dumbbell: two triangles joined by a path of length 2 has min degree 2
  SimpleGraph dumbbell(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(base(dumbbell) == dumbbell);

  CHECK_THROWS_AS(base(path(4)), std::invalid_argument);
}

TEST_CASE("induced_cycles on both base shapes") {
  auto lengths = [](const CycleList& cl) {
    std::vector<std::size_t> out;
    for (const auto& c : cl.cycles) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(lengths(induced_cycles(theta_hat(1, 2, 2))) == std::vector<std::size_t>{3, 3, 4});
  CHECK(lengths(induced_cycles(theta_hat(2, 2, 2))) == std::vector<std::size_t>{4, 4, 4});
  CHECK(lengths(induced_cycles(theta_hat(1, 2, 3))) == std::vector<std::size_t>{3, 4, 5});
  SimpleGraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(lengths(induced_cycles(bowtie)) == std::vector<std::size_t>{3, 3});
  SimpleGraph dumbbell(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(lengths(induced_cycles(dumbbell)) == std::vector<std::size_t>{3, 3});
  // cycles of a decorated graph are computed on its base
  CHECK(lengths(induced_cycles(drop_isolated(theta1(12, 1, 1).negative_part()).first)) ==
        std::vector<std::size_t>{4, 4, 4});
}

TEST_CASE("cycle_sign and balance") {
  SignedCompleteGraph k5(5, SimpleGraph(5));
  CHECK(is_balanced(k5));

  SignedCompleteGraph g3(3, SimpleGraph(3, {{0, 1}}));
  CHECK(cycle_sign(g3, {0, 1, 2}) == -1);
  CHECK_FALSE(is_balanced(g3));
  CHECK_THROWS_AS(cycle_sign(g3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_sign(g3, {0, 1, 1}), std::invalid_argument);

  // negative edges across a bipartition: balanced
  SignedCompleteGraph bip(4, SimpleGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(is_balanced(bip));

  std::mt19937_64 rng(17);
  for (int n = 3; n <= 7; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      SignedCompleteGraph g(n, random_negative_part(rng, n, 0.3));
      CHECK(is_balanced(g) == balanced_by_triangles(g));
    }

  // nonempty bicyclic negative part is never balanced
  for (int n = 6; n <= 9; ++n) CHECK_FALSE(is_balanced(theta2(n, 5)));
}
