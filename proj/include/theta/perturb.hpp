#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "theta/graph.hpp"

namespace theta {

/// Reverses the positive edge {r,t} and the negative edge {r,s}.
struct SwapMove {
  int r, s, t;
};

SignedCompleteGraph swap_signs(const SignedCompleteGraph& g, const SwapMove& m);

enum class HypothesisClass { Strict, Weak, Fails };

/// Classifies the eigenvector condition "x_r >= 0 and x_s >= x_t, or
/// x_r <= 0 and x_s <= x_t" at tolerance tol; Strict when at least one
/// inequality of a satisfied pattern holds beyond tol. Both x and -x are
/// tried (the two sign patterns cover that automatically).
HypothesisClass hypothesis_holds(const std::vector<double>& x, const SwapMove& m, double tol);

struct SwapOutcome {
  SignedCompleteGraph after;
  double lambda_before;
  double lambda_after;
  HypothesisClass classification;
  /// Set iff classification != Fails: whether lambda_after respects the
  /// monotonicity guarantee at the given tolerance.
  std::optional<bool> verdict;
  double margin;  // lambda_after - lambda_before
};

SwapOutcome checked_swap(const SignedCompleteGraph& g, const SwapMove& m, double tol);

struct SearchStep {
  SwapMove move;
  double lambda;
};

struct SearchResult {
  SignedCompleteGraph best;
  double lambda;
  std::vector<SearchStep> trace;
  int iterations = 0;
  bool reached_local_optimum = false;
};

/// Hill climbing over sign swaps that keep the negative part connected
/// bicyclic; first-improvement with seed-shuffled move order, accept when the
/// index increases by more than 1e-9. Deterministic for a given seed.
SearchResult local_search_max(int n, int k, std::uint64_t seed, int max_iters);

/// True when the negative edge set induces a connected bicyclic graph on its
/// support.
bool negative_part_connected_bicyclic(const SignedCompleteGraph& g);

}  // namespace theta
