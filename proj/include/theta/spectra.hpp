#pragma once

#include <optional>
#include <vector>

#include "theta/graph.hpp"

namespace theta {

/// Dense real symmetric matrix, row-major.
struct RealSymMatrix {
  int n = 0;
  std::vector<double> a;

  RealSymMatrix() = default;
  explicit RealSymMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

RealSymMatrix adjacency_real(const SignedCompleteGraph& g);
RealSymMatrix to_real(const IntMatrix& m);

struct SpectralResult {
  std::vector<double> eigenvalues;       // descending
  std::vector<double> principal_vector;  // unit norm, sign-normalized
  double residual = 0.0;                 // max-norm of A x - lambda_1 x
};

struct EigOptions {
  double tol = 1e-12;   // off-diagonal max-norm target
  int max_sweeps = 100;
};

/// Cyclic Jacobi with a fixed (row-major pair) sweep order; deterministic for
/// identical inputs. Throws on asymmetric input or non-convergence.
SpectralResult eig_symmetric(const RealSymMatrix& m, const EigOptions& opts = {});

/// Index (largest eigenvalue) of a signed complete graph with its
/// sign-normalized principal eigenvector.
std::pair<double, std::vector<double>> index(const SignedCompleteGraph& g, double tol = 1e-12);

struct InterlaceWitness {
  int i;            // 1-based position of the violated triple
  double lambda_i;  // upper eigenvalue of A
  double mu_i;      // eigenvalue of the principal submatrix
  double lambda_lower;
};

struct InterlaceResult {
  bool ok;
  std::optional<InterlaceWitness> witness;
};

InterlaceResult interlace_check(const RealSymMatrix& m, const std::vector<int>& subset, double tol);

inline int index_lower_bound(int n, int k) { return n - k + 1; }
inline int index_upper_bound(int n) { return n - 1; }

/// Asserts index in [n-k+1 - tol, n-1 + tol]; vacuous unless k >= 2 (the
/// lower-bound form needs n-k+1 <= n-1).
bool check_index_bounds(const SignedCompleteGraph& g, int k, double tol, double* lambda_out = nullptr);

/// lambda_1 plus lifted principal eigenvector computed through the
/// singleton-blocks + filler-block special partition (symmetrized quotient).
/// Mathematically equal to index(); the residual is certified against the
/// full adjacency.
struct QuotientIndexResult {
  double lambda1;
  std::vector<double> vec;  // unit, sign-normalized, one entry per vertex
  double residual;
};
QuotientIndexResult index_via_quotient(const SignedCompleteGraph& g, double tol = 1e-12);

}  // namespace theta
