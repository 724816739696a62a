#include "theta/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "theta/kernels.hpp"

namespace theta {

RealSymMatrix adjacency_real(const SignedCompleteGraph& g) {
  const int n = g.order();
  RealSymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<double>(g.sign(i, j));
  return m;
}

RealSymMatrix to_real(const IntMatrix& src) {
  RealSymMatrix m(src.size());
  for (int i = 0; i < src.size(); ++i)
    for (int j = 0; j < src.size(); ++j) m.at(i, j) = static_cast<double>(src.at(i, j));
  return m;
}

namespace {

double off_diagonal_max(const RealSymMatrix& m) {
  double mx = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) mx = std::max(mx, std::fabs(m.at(i, j)));
  return mx;
}

void normalize_sign(std::vector<double>& x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::fabs(x[i]) > std::fabs(x[best])) best = i;
  if (x[best] < 0.0)
    for (double& v : x) v = -v;
}

}  // namespace

SpectralResult eig_symmetric(const RealSymMatrix& input, const EigOptions& opts) {
  const int n = input.n;
  if (n < 1) throw std::invalid_argument("eig_symmetric: empty matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (input.at(i, j) != input.at(j, i)) throw std::invalid_argument("eig_symmetric: input not symmetric");

  RealSymMatrix a = input;
  std::vector<double> vt(static_cast<std::size_t>(n) * n, 0.0);  // row i = eigenvector i in progress
  for (int i = 0; i < n; ++i) vt[static_cast<std::size_t>(i) * n + i] = 1.0;

  const auto rotate = kernels::active_rotate();
  bool converged = (n == 1) || off_diagonal_max(a) <= opts.tol;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double app = a.at(p, p), aqq = a.at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* rp = &a.a[static_cast<std::size_t>(p) * n];
        double* rq = &a.a[static_cast<std::size_t>(q) * n];
        rotate(rp, rq, static_cast<std::size_t>(n), c, s);
        // Exact 2x2 block and symmetry restoration.
        a.at(p, p) = app - t * apq;
        a.at(q, q) = aqq + t * apq;
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a.at(i, p) = a.at(p, i);
          a.at(i, q) = a.at(q, i);
        }
        rotate(&vt[static_cast<std::size_t>(p) * n], &vt[static_cast<std::size_t>(q) * n],
               static_cast<std::size_t>(n), c, s);
      }
    converged = off_diagonal_max(a) <= opts.tol;
  }
  if (!converged) throw std::runtime_error("eig_symmetric: no convergence within the sweep cap");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  SpectralResult out;
  out.eigenvalues.reserve(n);
  for (int i : order) out.eigenvalues.push_back(a.at(i, i));
  out.principal_vector.assign(vt.begin() + static_cast<std::size_t>(order[0]) * n,
                              vt.begin() + static_cast<std::size_t>(order[0] + 1) * n);
  // Jacobi keeps rows orthonormal to machine precision; renormalize anyway.
  double norm = std::sqrt(std::inner_product(out.principal_vector.begin(), out.principal_vector.end(),
                                             out.principal_vector.begin(), 0.0));
  for (double& v : out.principal_vector) v /= norm;
  normalize_sign(out.principal_vector);

  double lam = out.eigenvalues[0];
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += input.at(i, j) * out.principal_vector[j];
    res = std::max(res, std::fabs(acc - lam * out.principal_vector[i]));
  }
  out.residual = res;
  return out;
}

std::pair<double, std::vector<double>> index(const SignedCompleteGraph& g, double tol) {
  EigOptions opts;
  opts.tol = tol;
  SpectralResult r = eig_symmetric(adjacency_real(g), opts);
  return {r.eigenvalues[0], r.principal_vector};
}

InterlaceResult interlace_check(const RealSymMatrix& m, const std::vector<int>& subset, double tol) {
  if (subset.empty()) throw std::invalid_argument("interlace_check: empty subset");
  for (int v : subset)
    if (v < 0 || v >= m.n) throw std::invalid_argument("interlace_check: index out of range");
  const int n = m.n, k = static_cast<int>(subset.size());
  RealSymMatrix sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(subset[i], subset[j]);
  auto ea = eig_symmetric(m).eigenvalues;
  auto eb = eig_symmetric(sub).eigenvalues;
  for (int i = 1; i <= k; ++i) {
    double hi = ea[i - 1], mid = eb[i - 1], lo = ea[n - k + i - 1];
    if (!(hi >= mid - tol && mid >= lo - tol))
      return {false, InterlaceWitness{i, hi, mid, lo}};
  }
  return {true, std::nullopt};
}

bool check_index_bounds(const SignedCompleteGraph& g, int k, double tol, double* lambda_out) {
  double lam = index(g, 1e-12).first;
  if (lambda_out) *lambda_out = lam;
  if (k < 2) return true;
  const int n = g.order();
  return lam >= index_lower_bound(n, k) - tol && lam <= index_upper_bound(n) + tol;
}

QuotientIndexResult index_via_quotient(const SignedCompleteGraph& g, double tol) {
  const int n = g.order();
  const SimpleGraph& neg = g.negative_part();
  std::vector<int> support;
  std::vector<int> pos(n, -1);
  for (int v = 0; v < n; ++v)
    if (!neg.neighbors(v).empty()) {
      pos[v] = static_cast<int>(support.size());
      support.push_back(v);
    }
  const int b = static_cast<int>(support.size());
  const int filler = n - b;
  const int m = b + (filler > 0 ? 1 : 0);
  if (m == 0) throw std::invalid_argument("index_via_quotient: empty graph");

  // Symmetrized quotient of the singleton/filler special partition.
  RealSymMatrix q(m);
  const double root_f = filler > 0 ? std::sqrt(static_cast<double>(filler)) : 0.0;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) {
      double v = static_cast<double>(g.sign(support[i], support[j]));
      q.at(i, j) = v;
      q.at(j, i) = v;
    }
  if (filler > 0) {
    for (int i = 0; i < b; ++i) {
      q.at(i, b) = root_f;
      q.at(b, i) = root_f;
    }
    q.at(b, b) = static_cast<double>(filler - 1);
  }

  EigOptions opts;
  opts.tol = tol;
  SpectralResult r = eig_symmetric(q, opts);

  QuotientIndexResult out;
  out.lambda1 = r.eigenvalues[0];
  out.vec.assign(n, 0.0);
  for (int i = 0; i < b; ++i) out.vec[support[i]] = r.principal_vector[i];
  if (filler > 0) {
    double fv = r.principal_vector[b] / root_f;
    for (int v = 0; v < n; ++v)
      if (pos[v] < 0) out.vec[v] = fv;
  }
  normalize_sign(out.vec);

  // Residual against the true n x n adjacency, without materializing it:
  // (A x)_r = (sum_v x_v - x_r) - 2 * sum_{v in N_neg(r)} x_v.
  double total = std::accumulate(out.vec.begin(), out.vec.end(), 0.0);
  double res = 0.0;
  for (int v = 0; v < n; ++v) {
    double acc = total - out.vec[v];
    for (int w : neg.neighbors(v)) acc -= 2.0 * out.vec[w];
    res = std::max(res, std::fabs(acc - out.lambda1 * out.vec[v]));
  }
  out.residual = res;
  return out;
}

}  // namespace theta
