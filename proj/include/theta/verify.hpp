#pragma once

#include <string>
#include <utility>
#include <vector>

#include "theta/graph.hpp"
#include "theta/intpoly.hpp"

namespace theta {

enum class PointStatus { ExactPass, NumericPass, Fail, Info };

const char* to_string(PointStatus s);

struct VerificationPoint {
  std::vector<std::pair<std::string, std::string>> params;
  PointStatus status;
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  std::vector<VerificationPoint> points;
  std::vector<std::string> notes;
  double wall_ms = 0.0;

  int count(PointStatus s) const;
  bool gating_ok() const { return count(PointStatus::Fail) == 0; }
  void add(std::vector<std::pair<std::string, std::string>> params, PointStatus status, std::string detail);
};

/// JSON with stable field order; floats are printed with 15 significant
/// digits, exact integers as decimal strings. The timestamp is an isolated
/// top-level field, omitted when with_timestamp is false.
std::string report_to_json(const VerificationReport& r, bool with_timestamp = true);

std::string format_double(double v);  // %.15g

struct TheoremRegion {
  int k_min = 15;
  int n_offset = 20;
  bool assertion_mode(int n, int k) const { return k >= k_min && n >= k + n_offset; }
};

// --- suites ---

/// Exact factorization of both family characteristic polynomials on the
/// (n, k, s) grid; boundary s=0/t=0 points included.
VerificationReport verify_factorizations(const std::vector<int>& ns, const std::vector<int>& ks);

/// The three difference identities (factors 8, -8, -16) and the three
/// polynomial splits, exact on the grid.
VerificationReport verify_appendix_identities(const std::vector<int>& ns, const std::vector<int>& ks);

/// Sign conclusions at the stated integer evaluation points, plus the same
/// signs at the actual largest roots (interval endpoints); the expanded
/// closed-form displays are compared informationally.
VerificationReport verify_appendix_signs(const std::vector<int>& ns, const std::vector<int>& ks);

/// Largest root of F over s in [0, k-6] is attained at an extreme with
/// margin > 1e-9 (assertion only inside the theorem region).
VerificationReport verify_ordering_lemma(int n, int k);

/// Root interval of P strictly above both F extremes, refining eps down to
/// 1e-30 before declaring failure.
VerificationReport verify_theta2_dominates(int n, int k);

/// Index bounds for the family grids: n-k+1 - tol <= lambda1 <= n-1 - 1e-9,
/// plus the theta1-specific n-4 / n-3 lower bounds.
VerificationReport verify_bounds(const std::vector<int>& ns, const std::vector<int>& ks);

struct RankedGraph {
  std::string certificate;
  double lambda1;
  double margin_to_winner;
};

struct TheoremResult {
  VerificationReport report;
  std::vector<RankedGraph> top;  // best first
  std::string winner_certificate;
  std::string expected_certificate;
  int classes = 0;
  bool assertion_mode = false;
  double runner_up_margin = 0.0;
};

/// Streams every bicyclic class on k-1 vertices embedded in K_n, computes all
/// indices, resolves near-ties exactly, and (in assertion mode) requires the
/// unique argmax to be the two-triangles-with-pendants family.
TheoremResult verify_theorem(int n, int k, int workers);

std::string ranking_to_csv(const TheoremResult& r);

}  // namespace theta
