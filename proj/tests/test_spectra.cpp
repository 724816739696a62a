#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "theta/enumerate.hpp"
#include "theta/families.hpp"
#include "theta/kernels.hpp"
#include "theta/roots.hpp"
#include "theta/spectra.hpp"

using namespace theta;

namespace {

SimpleGraph random_negative_part(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

}  // namespace

TEST_CASE("complete graph spectrum") {
  SignedCompleteGraph k6(6, SimpleGraph(6));
  SpectralResult r = eig_symmetric(adjacency_real(k6));
  CHECK(r.eigenvalues[0] == doctest::Approx(5.0).epsilon(1e-12));
  for (int i = 1; i < 6; ++i) CHECK(r.eigenvalues[i] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.residual <= 1e-10 * 6);
}

TEST_CASE("one by one matrix") {
  RealSymMatrix m(1);
  m.at(0, 0) = 42.5;
  SpectralResult r = eig_symmetric(m);
  CHECK(r.eigenvalues == std::vector<double>{42.5});
  CHECK(r.principal_vector == std::vector<double>{1.0});
}

TEST_CASE("asymmetric input rejected") {
  RealSymMatrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0 + 1e-15;
  CHECK_THROWS_AS(eig_symmetric(m), std::invalid_argument);
}

TEST_CASE("index examples") {
  CHECK(index(SignedCompleteGraph(7, SimpleGraph(7))).first == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(index(SignedCompleteGraph(2, SimpleGraph(2, {{0, 1}}))).first == doctest::Approx(1.0).epsilon(1e-12));

  // numeric index matches the exact largest root of the quotient factor
  double lam = index(theta2(12, 8)).first;
  BigRat eps(BigInt(1), boost::multiprecision::pow(BigInt(10), 12));
  RootInterval iv = max_real_root(P_poly(12, 8), eps);
  CHECK(std::fabs(lam - iv.midpoint_double()) < 1e-8);

  double lam35 = index(theta2(35, 15)).first;
  RootInterval iv35 = max_real_root(P_poly(35, 15), eps);
  CHECK(std::fabs(lam35 - iv35.midpoint_double()) < 1e-8);
}

TEST_CASE("principal vector sign normalization and residual") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 5 + static_cast<int>(rng() % 10);
    SignedCompleteGraph g(n, random_negative_part(rng, n, 0.35));
    auto [lam, x] = index(g);
    (void)lam;
    auto it = std::max_element(x.begin(), x.end(),
                               [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    CHECK(*it > 0.0);
    double norm = 0;
    for (double v : x) norm += v * v;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalues invariant under relabeling") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 8;
    SimpleGraph b = random_negative_part(rng, n, 0.4);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> pe;
    for (auto [u, v] : b.edges()) pe.emplace_back(perm[u], perm[v]);
    auto e1 = eig_symmetric(adjacency_real(SignedCompleteGraph(n, b))).eigenvalues;
    auto e2 = eig_symmetric(adjacency_real(SignedCompleteGraph(n, SimpleGraph(n, pe)))).eigenvalues;
    for (int i = 0; i < n; ++i) CHECK(std::fabs(e1[i] - e2[i]) < 1e-10);
  }
}

TEST_CASE("determinism and kernel equivalence on whole eigensolves") {
  SignedCompleteGraph g = theta1(20, 3, 5);
  RealSymMatrix m = adjacency_real(g);
  SpectralResult a = eig_symmetric(m);
  SpectralResult b = eig_symmetric(m);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.principal_vector == b.principal_vector);
  if (kernels::avx2_available()) {
    kernels::select_kernel("scalar");
    SpectralResult c = eig_symmetric(m);
    kernels::select_kernel("auto");
    CHECK(a.eigenvalues == c.eigenvalues);
    CHECK(a.principal_vector == c.principal_vector);
  }
}

TEST_CASE("interlacing") {
  RealSymMatrix k3 = adjacency_real(SignedCompleteGraph(3, SimpleGraph(3)));
  auto all = interlace_check(k3, {0, 1, 2}, 1e-12);
  CHECK(all.ok);
  auto one = interlace_check(k3, {1}, 1e-12);
  CHECK(one.ok);
  CHECK_THROWS_AS(interlace_check(k3, {}, 1e-9), std::invalid_argument);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    SignedCompleteGraph g(9, random_negative_part(rng, 9, 0.4));
    RealSymMatrix m = adjacency_real(g);
    int sz = 1 + static_cast<int>(rng() % 8);
    std::vector<int> all_idx(9);
    for (int i = 0; i < 9; ++i) all_idx[i] = i;
    std::shuffle(all_idx.begin(), all_idx.end(), rng);
    all_idx.resize(sz);
    std::sort(all_idx.begin(), all_idx.end());
    CHECK(interlace_check(m, all_idx, 1e-9).ok);
  }
}

TEST_CASE("index bounds") {
  CHECK(index_lower_bound(35, 15) == 21);
  CHECK(index_upper_bound(35) == 34);
  double lam = 0;
  CHECK(check_index_bounds(theta1(30, 2, 2), 10, 1e-8, &lam));
  CHECK(lam >= 21 - 1e-8);
  CHECK(lam <= 29 + 1e-8);
}

TEST_CASE("index strictly below n-1 whenever negatives exist") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 10);
    SimpleGraph b = random_negative_part(rng, n, 0.3);
    if (b.edge_count() == 0) continue;
    SignedCompleteGraph g(n, b);
    CHECK_FALSE(is_balanced(g));
    CHECK(index(g).first < n - 1 - 1e-9);
  }
}

TEST_CASE("index_via_quotient agrees with the full eigensolve") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 10 + static_cast<int>(rng() % 15);
    SimpleGraph b = random_negative_part(rng, 4 + static_cast<int>(rng() % 5), 0.5);
    SignedCompleteGraph g = embed(b, n);
    double full = index(g).first;
    QuotientIndexResult q = index_via_quotient(g);
    CHECK(std::fabs(full - q.lambda1) < 1e-10);
    CHECK(q.residual <= 1e-10 * n);
  }
  // no negative edges at all
  QuotientIndexResult q = index_via_quotient(SignedCompleteGraph(9, SimpleGraph(9)));
  CHECK(q.lambda1 == doctest::Approx(8.0).epsilon(1e-12));
}
