#include "theta/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace theta {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_theta1_params(int n, int s, int t) {
  require(s >= 0 && t >= 0, "theta1: pendant counts must be nonnegative");
  int k = s + t + 6;
  require(n >= k, "theta1: need n >= k = s+t+6");
}

void check_theta2_params(int n, int k) {
  require(k >= 5, "theta2: need k >= 5");
  require(n >= k, "theta2: need n >= k");
}

IntPoly make_poly(std::vector<long long> c) {
  std::vector<BigInt> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return IntPoly(std::move(out));
}

}  // namespace

SimpleGraph theta_hat(int a, int b, int c) {
  require(1 <= a && a <= b && b <= c, "theta_hat: need 1 <= a <= b <= c");
  require(b >= 2, "theta_hat: need b >= 2 (two length-1 paths would duplicate an edge)");
  const int n = a + b + c - 1;
  std::vector<Edge> edges;
  int next = 2;  // hubs are 0 and 1
  auto add_path = [&](int len) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  };
  add_path(a);
  add_path(b);
  add_path(c);
  return SimpleGraph(n, std::move(edges));
}

SignedCompleteGraph theta1(int n, int s, int t) {
  check_theta1_params(n, s, t);
  // v1=0, v2=1, v3=2, u1=3, w1=4
  std::vector<Edge> edges{{0, 3}, {2, 3}, {0, 1}, {1, 2}, {0, 4}, {2, 4}};
  int next = 5;
  for (int i = 0; i < s; ++i) edges.emplace_back(3, next++);
  for (int i = 0; i < t; ++i) edges.emplace_back(2, next++);
  return SignedCompleteGraph(n, SimpleGraph(n, std::move(edges)));
}

SignedCompleteGraph theta2(int n, int k) {
  check_theta2_params(n, k);
  // v1=0, v2=1, u1=2, w1=3
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
  int next = 4;
  for (int i = 0; i < k - 5; ++i) edges.emplace_back(1, next++);
  return SignedCompleteGraph(n, SimpleGraph(n, std::move(edges)));
}

SpecialPartition theta1_partition(int n, int s, int t) {
  check_theta1_params(n, s, t);
  require(s >= 1 && t >= 1, "theta1_partition: empty blocks at s=0 or t=0");
  SpecialPartition pi;
  pi.positive_count = 7;
  auto range = [](int lo, int hi) {
    std::vector<int> v(hi - lo);
    std::iota(v.begin(), v.end(), lo);
    return v;
  };
  pi.blocks = {{0}, {3}, {2}, {1, 4}, range(5 + s, 5 + s + t), range(5, 5 + s), range(5 + s + t, n)};
  return pi;
}

SpecialPartition theta2_partition(int n, int k) {
  check_theta2_params(n, k);
  require(k >= 6, "theta2_partition: empty pendant block at k=5");
  require(n >= k, "theta2_partition: empty filler block");
  SpecialPartition pi;
  pi.positive_count = 5;
  auto range = [](int lo, int hi) {
    std::vector<int> v(hi - lo);
    std::iota(v.begin(), v.end(), lo);
    return v;
  };
  pi.blocks = {{0}, {1}, {2, 3}, range(4, k - 1), range(k - 1, n)};
  return pi;
}

IntMatrix quotient_theta1_matrix(int n, int s, int t) {
  check_theta1_params(n, s, t);
  const int k = s + t + 6, u = n - k + 1;
  const long long rows[7][7] = {
      {0, -1, 1, -2, t, s, u},  {-1, 0, -1, 2, t, -s, u}, {1, -1, 0, -2, -t, s, u}, {-1, 1, -1, 1, t, s, u},
      {1, 1, -1, 2, t - 1, s, u}, {1, -1, 1, 2, t, s - 1, u}, {1, 1, 1, 2, t, s, u - 1}};
  IntMatrix q(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) q.at(i, j) = rows[i][j];
  return q;
}

IntMatrix quotient_theta2_matrix(int n, int k) {
  check_theta2_params(n, k);
  const int u = n - k + 1;
  const long long rows[5][5] = {{0, -1, -2, k - 5, u},
                                {-1, 0, -2, 5 - k, u},
                                {-1, -1, 1, k - 5, u},
                                {1, -1, 2, k - 6, u},
                                {1, 1, 2, k - 5, u - 1}};
  IntMatrix q(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) q.at(i, j) = rows[i][j];
  return q;
}

IntPoly F_poly(int n, int k, int s) {
  const int t = k - 6 - s;
  check_theta1_params(n, s, t);
  const long long N = n, K = k, S = s, T = t, U = n - k + 1;
  return make_poly({
      -44 * K * U - 56 * S * T + 112 * S * T * U - 16 * S * U + 287 * N - 272 * K + 8 * S + 193,
      -80 * K * U - 96 * S * T - 32 * S * T * U - 32 * S * U + 570 * N - 512 * K + 32 * S + 199,
      -24 * K * U - 16 * S * T - 16 * S * T * U - 16 * S * U + 273 * N - 192 * K + 48 * S - 267,
      16 * K * U + 32 * S * T - 20 * N + 64 * K + 32 * S - 349,
      4 * K * U + 8 * S * T - 15 * N + 16 * K + 8 * S - 61,
      21 - 6 * N,
      7 - N,
      1,
  });
}

IntPoly P_poly(int n, int k) {
  check_theta2_params(n, k);
  const long long N = n, K = k, U = n - k + 1;
  return make_poly({
      -28 * K * U + 127 * N - 120 * K + 97,
      8 * K * U - 36 * N + 48 * K - 91,
      4 * K * U - 6 * N + 8 * K - 22,
      10 - 4 * N,
      5 - N,
      1,
  });
}

IntPoly p_poly(int s, int t, int u) {
  const long long S = s, T = t, U = u, D = S - T - 2;
  return make_poly({14 * S * U - 7 * S - 14 * T * U + 7 * T - 12 * U + 6, -4 * ((U + 3) * D + 4),
                    -2 * ((U + 1) * D + 4), 4 * D, D});
}

IntPoly p1_poly(int s, int t, int u) {
  const long long S = s, T = t, U = u, D = S - T - 2;
  return make_poly({-7 * S - 14 * T * U - 12 * U, -16, -8, 4 * D, D});
}

IntPoly p2_poly(int s, int t, int u) {
  const long long S = s, T = t, U = u, D = S - T - 2;
  return make_poly({14 * S * U + 7 * T + 6, -4 * (U + 3) * D, -2 * (U + 1) * D});
}

IntPoly P1cap_poly(int s, int t, int u) {
  const long long S = s, T = t, U = u, D = S - T - 2;
  return make_poly({-7 * S - 14 * T * U - 12 * U, -4 * ((U + 3) * D + 4), -2 * ((U + 1) * D + 4)});
}

IntPoly P2cap_poly(int s, int t, int u) {
  const long long S = s, T = t, U = u, D = S - T - 2;
  return make_poly({14 * S * U + 7 * T + 6, 0, 0, 4 * D, D});
}

// The constant terms of s_poly/s2_poly carry +20n and those of
// Scap_poly/S2cap_poly carry +16n and a doubled quadratic coefficient; these
// are forced by the exact difference identities the polynomials must satisfy.
IntPoly s_poly(int n, int k) {
  const long long N = n, K = k;
  return make_poly({-2 * K * N - 21 * K + 20 * N + 2 * K * K + 12,
                    -4 * (-K * K + K * N + 11 * K - 11 * N - 3),
                    -2 * (-K * K + K * N + 12 * K - 14 * N + 10), 4 * (N - 7), K - 8});
}

IntPoly s1_poly(int n, int k) {
  const long long N = n, K = k;
  return make_poly({2 * K * K + 12, 0, 0, 4 * (N - 7), K - 8});
}

IntPoly s2_poly(int n, int k) {
  const long long N = n, K = k;
  return make_poly({-2 * K * N - 21 * K + 20 * N, -4 * (-K * K + K * N + 11 * K - 11 * N - 3),
                    -2 * (-K * K + K * N + 12 * K - 14 * N + 10)});
}

IntPoly Scap_poly(int n, int k) {
  const long long N = n, K = k;
  return make_poly({-2 * K * N - 17 * K + 16 * N + 2 * K * K + 9,
                    -2 * (-2 * K * K + 2 * K * N + 17 * K - 17 * N - 3),
                    -2 * (-K * K + K * N + 8 * K - 10 * N + 11), 2 * (N + K - 13), K - 7});
}

IntPoly S1cap_poly(int n, int k) {
  const long long N = n, K = k;
  return make_poly({2 * K * K + 9, 0, 0, 2 * (N + K - 13), K - 7});
}

IntPoly S2cap_poly(int n, int k) {
  const long long N = n, K = k;
  return make_poly({-2 * K * N - 17 * K + 16 * N, -2 * (-2 * K * K + 2 * K * N + 17 * K - 17 * N - 3),
                    -2 * (-K * K + K * N + 8 * K - 10 * N + 11)});
}

}  // namespace theta
