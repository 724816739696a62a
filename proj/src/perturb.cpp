#include "theta/perturb.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "theta/enumerate.hpp"
#include "theta/spectra.hpp"

namespace theta {

namespace {

std::string pair_str(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

SignedCompleteGraph swap_signs(const SignedCompleteGraph& g, const SwapMove& m) {
  if (m.r == m.s || m.r == m.t || m.s == m.t)
    throw std::invalid_argument("swap_signs: vertices must be pairwise distinct");
  if (g.sign(m.r, m.s) != -1)
    throw std::invalid_argument("swap_signs: edge " + pair_str(m.r, m.s) + " is not negative");
  if (g.sign(m.r, m.t) != 1)
    throw std::invalid_argument("swap_signs: edge " + pair_str(m.r, m.t) + " is not positive");
  std::vector<Edge> edges;
  edges.reserve(g.negative_part().edges().size());
  Edge removed{std::min(m.r, m.s), std::max(m.r, m.s)};
  for (const auto& e : g.negative_part().edges())
    if (e != removed) edges.push_back(e);
  edges.emplace_back(std::min(m.r, m.t), std::max(m.r, m.t));
  return SignedCompleteGraph(g.order(), SimpleGraph(g.order(), std::move(edges)));
}

HypothesisClass hypothesis_holds(const std::vector<double>& x, const SwapMove& m, double tol) {
  const int n = static_cast<int>(x.size());
  if (m.r < 0 || m.s < 0 || m.t < 0 || m.r >= n || m.s >= n || m.t >= n)
    throw std::invalid_argument("hypothesis_holds: vertex out of range for the eigenvector");
  const double xr = x[m.r], xs = x[m.s], xt = x[m.t];
  HypothesisClass best = HypothesisClass::Fails;
  // pattern 1: x_r >= 0, x_s >= x_t; pattern 2 is the same on -x
  if (xr >= -tol && xs >= xt - tol) {
    bool strict = xr > tol || xs > xt + tol;
    best = strict ? HypothesisClass::Strict : HypothesisClass::Weak;
  }
  if (xr <= tol && xs <= xt + tol) {
    bool strict = xr < -tol || xs < xt - tol;
    HypothesisClass c = strict ? HypothesisClass::Strict : HypothesisClass::Weak;
    if (c < best) best = c;
  }
  return best;
}

SwapOutcome checked_swap(const SignedCompleteGraph& g, const SwapMove& m, double tol) {
  auto [lam, vec] = index(g);
  HypothesisClass cls = hypothesis_holds(vec, m, tol);
  SignedCompleteGraph after = swap_signs(g, m);
  double lam_after = index(after).first;
  SwapOutcome out{after, lam, lam_after, cls, std::nullopt, lam_after - lam};
  if (cls != HypothesisClass::Fails) out.verdict = lam_after >= lam - tol;
  return out;
}

bool negative_part_connected_bicyclic(const SignedCompleteGraph& g) {
  auto [support, labels] = drop_isolated(g.negative_part());
  (void)labels;
  if (support.vertex_count() == 0) return false;
  return is_bicyclic(support);
}

namespace {

SimpleGraph random_bicyclic(int v, std::mt19937_64& rng) {
  // Random base fitting v vertices, grown by random pendant attachment.
  struct Base {
    bool theta;
    int a, b, c;
  };
  std::vector<Base> bases;
  for (int a = 1; a + 2 * std::max(a, 2) - 1 <= v; ++a)
    for (int b = std::max(a, 2); a + 2 * b - 1 <= v; ++b)
      for (int c = b; a + b + c - 1 <= v; ++c) bases.push_back({true, a, b, c});
  for (int p = 3; 2 * p - 1 <= v; ++p)
    for (int q = p; p + q - 1 <= v; ++q)
      for (int bridge = 0; (bridge == 0 ? p + q - 1 : p + q + bridge - 1) <= v; ++bridge)
        bases.push_back({false, p, q, bridge});
  const Base& pick = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
  std::vector<Edge> edges;
  int base_n;
  if (pick.theta) {
    int prev, next = 2;
    base_n = pick.a + pick.b + pick.c - 1;
    for (int len : {pick.a, pick.b, pick.c}) {
      prev = 0;
      for (int i = 0; i < len - 1; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, 1);
    }
  } else {
    int next = 0;
    auto add_cycle = [&](int len, int anchor) {
      int first = anchor >= 0 ? anchor : next++;
      int prev = first;
      for (int i = 1; i < len; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, first);
      return first;
    };
    int a1 = add_cycle(pick.a, -1);
    int joint = a1;
    for (int i = 0; i < pick.c; ++i) {
      edges.emplace_back(joint, next);
      joint = next++;
    }
    add_cycle(pick.b, joint);
    base_n = next;
  }
  for (int w = base_n; w < v; ++w) {
    int host = std::uniform_int_distribution<int>(0, w - 1)(rng);
    edges.emplace_back(host, w);
  }
  return SimpleGraph(v, std::move(edges));
}

}  // namespace

SearchResult local_search_max(int n, int k, std::uint64_t seed, int max_iters) {
  if (k < 6) throw std::invalid_argument("local_search_max: need k >= 6");
  if (n < k) throw std::invalid_argument("local_search_max: need n >= k");
  std::mt19937_64 rng(seed);
  SignedCompleteGraph g = embed(random_bicyclic(k - 1, rng), n);

  SearchResult result{g, 0.0, {}, 0, false};
  double lam = index_via_quotient(g).lambda1;
  result.lambda = lam;
  for (int iter = 0; iter < max_iters; ++iter) {
    result.iterations = iter + 1;
    std::vector<SwapMove> moves;
    for (const auto& [u, v] : g.negative_part().edges())
      for (int who = 0; who < 2; ++who) {
        int r = who ? v : u, s = who ? u : v;
        for (int t = 0; t < n; ++t)
          if (t != r && t != s && g.sign(r, t) == 1) moves.push_back({r, s, t});
      }
    std::shuffle(moves.begin(), moves.end(), rng);
    bool improved = false;
    for (const auto& m : moves) {
      SignedCompleteGraph cand = swap_signs(g, m);
      if (!negative_part_connected_bicyclic(cand)) continue;
      double cl = index_via_quotient(cand).lambda1;
      if (cl > lam + 1e-9) {
        g = cand;
        lam = cl;
        result.trace.push_back({m, cl});
        improved = true;
        break;
      }
    }
    if (!improved) {
      result.reached_local_optimum = true;
      break;
    }
  }
  result.best = g;
  result.lambda = lam;
  return result;
}

}  // namespace theta
