#include "theta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "theta/canonical.hpp"
#include "theta/enumerate.hpp"
#include "theta/families.hpp"
#include "theta/graph6.hpp"
#include "theta/intmatrix.hpp"
#include "theta/parallel.hpp"
#include "theta/roots.hpp"
#include "theta/spectra.hpp"

namespace theta {

const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::ExactPass: return "exact-pass";
    case PointStatus::NumericPass: return "numeric-pass";
    case PointStatus::Fail: return "fail";
    case PointStatus::Info: return "informational";
  }
  return "?";
}

int VerificationReport::count(PointStatus s) const {
  int c = 0;
  for (const auto& p : points)
    if (p.status == s) ++c;
  return c;
}

void VerificationReport::add(std::vector<std::pair<std::string, std::string>> params, PointStatus status,
                             std::string detail) {
  points.push_back({std::move(params), status, std::move(detail)});
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string report_to_json(const VerificationReport& r, bool with_timestamp) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["notes"] = r.notes;
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : r.points) {
    nlohmann::ordered_json jp;
    nlohmann::ordered_json params;
    for (const auto& [key, val] : p.params) params[key] = val;
    jp["params"] = params;
    jp["status"] = to_string(p.status);
    jp["detail"] = p.detail;
    points.push_back(jp);
  }
  j["points"] = points;
  j["totals"] = {{"exact_pass", r.count(PointStatus::ExactPass)},
                 {"numeric_pass", r.count(PointStatus::NumericPass)},
                 {"fail", r.count(PointStatus::Fail)},
                 {"informational", r.count(PointStatus::Info)}};
  j["gating_ok"] = r.gating_ok();
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    j["timestamp"] = {{"unix_ms", std::chrono::duration_cast<std::chrono::milliseconds>(now).count()},
                      {"wall_ms", format_double(r.wall_ms)}};
  }
  return j.dump(2);
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string first_diff(const IntPoly& a, const IntPoly& b) {
  int d = std::max(a.degree(), b.degree());
  for (int i = 0; i <= d; ++i)
    if (a.coeff(i) != b.coeff(i))
      return "coefficient of x^" + std::to_string(i) + ": " + a.coeff(i).str() + " vs " + b.coeff(i).str();
  return "equal";
}

// Cached exact characteristic polynomials of the family adjacency matrices.
struct FamilyCharPolys {
  std::map<std::tuple<int, int, int>, IntPoly> theta1_cache;  // (n, k, s)
  std::map<std::pair<int, int>, IntPoly> theta2_cache;        // (n, k)

  const IntPoly& theta1_poly(int n, int k, int s) {
    auto key = std::make_tuple(n, k, s);
    auto it = theta1_cache.find(key);
    if (it == theta1_cache.end())
      it = theta1_cache.emplace(key, char_poly_exact(adjacency_matrix(theta1(n, s, k - 6 - s)))).first;
    return it->second;
  }
  const IntPoly& theta2_poly(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = theta2_cache.find(key);
    if (it == theta2_cache.end()) it = theta2_cache.emplace(key, char_poly_exact(adjacency_matrix(theta2(n, k)))).first;
    return it->second;
  }
};

BigRat rat_eps(int negative_exponent) {
  return BigRat(BigInt(1), boost::multiprecision::pow(BigInt(10), negative_exponent));
}

std::string interval_str(const RootInterval& iv) {
  return "(" + format_double(static_cast<double>(iv.lo)) + ", " + format_double(static_cast<double>(iv.hi)) + "]";
}

/// Sign of poly at the largest root of root_of, decided by endpoint signs of
/// a shrinking isolating interval; 0 when undecidable at eps 1e-30.
int sign_at_max_root(const IntPoly& poly, const IntPoly& root_of) {
  for (int e = 12; e <= 30; e += 6) {
    RootInterval iv = max_real_root(root_of, rat_eps(e));
    int slo = sign_of(poly.evaluate(iv.lo));
    int shi = sign_of(poly.evaluate(iv.hi));
    if (iv.exact()) return shi;
    if (slo == shi && slo != 0) return slo;
  }
  return 0;
}

}  // namespace

VerificationReport verify_factorizations(const std::vector<int>& ns, const std::vector<int>& ks) {
  Timer timer;
  VerificationReport r;
  r.claim = "family-charpoly-factorizations";
  FamilyCharPolys cache;
  for (int n : ns)
    for (int k : ks) {
      if (n < k) continue;
      for (int s = 0; s <= k - 6; ++s) {
        Params params{{"family", "theta1"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}, {"s", std::to_string(s)}};
        IntPoly expect = pow(IntPoly::x_plus(1), n - 7) * F_poly(n, k, s);
        const IntPoly& actual = cache.theta1_poly(n, k, s);
        if (actual == expect)
          r.add(params, PointStatus::ExactPass, "charpoly == (x+1)^{n-7} F");
        else
          r.add(params, PointStatus::Fail, first_diff(actual, expect));
      }
      Params params{{"family", "theta2"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
      IntPoly expect = pow(IntPoly::x_plus(1), n - 5) * P_poly(n, k);
      const IntPoly& actual = cache.theta2_poly(n, k);
      if (actual == expect)
        r.add(params, PointStatus::ExactPass, "charpoly == (x+1)^{n-5} P");
      else
        r.add(params, PointStatus::Fail, first_diff(actual, expect));
    }
  r.wall_ms = timer.ms();
  return r;
}

VerificationReport verify_appendix_identities(const std::vector<int>& ns, const std::vector<int>& ks) {
  Timer timer;
  VerificationReport r;
  r.claim = "difference-identities-and-splits";
  FamilyCharPolys cache;
  for (int n : ns)
    for (int k : ks) {
      if (n < k) continue;
      const int u = n - k + 1;
      // identity 1: charpoly(s-1,t+1) - charpoly(s,t) == 8 (x+1)^{n-7} p(s,t,u)
      for (int s = 1; s <= k - 6; ++s) {
        int t = k - 6 - s;
        Params params{{"identity", "theta1-shift-8p"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                      {"s", std::to_string(s)}};
        IntPoly diff = cache.theta1_poly(n, k, s - 1) - cache.theta1_poly(n, k, s);
        IntPoly expect = BigInt(8) * (pow(IntPoly::x_plus(1), n - 7) * p_poly(s, t, u));
        r.add(params, diff == expect ? PointStatus::ExactPass : PointStatus::Fail,
              diff == expect ? "exact" : first_diff(diff, expect));
      }
      // splits on the same parameters
      for (int s = 0; s <= k - 6; ++s) {
        int t = k - 6 - s;
        Params params{{"identity", "p-splits"}, {"s", std::to_string(s)}, {"t", std::to_string(t)},
                      {"u", std::to_string(u)}};
        bool ok = p_poly(s, t, u) == p1_poly(s, t, u) + p2_poly(s, t, u) &&
                  p_poly(s, t, u) == P1cap_poly(s, t, u) + P2cap_poly(s, t, u);
        r.add(params, ok ? PointStatus::ExactPass : PointStatus::Fail, ok ? "p == p1+p2 == P1+P2" : "split mismatch");
      }
      {
        Params params{{"identity", "s-split"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        bool ok = s_poly(n, k) == s1_poly(n, k) + s2_poly(n, k);
        r.add(params, ok ? PointStatus::ExactPass : PointStatus::Fail, ok ? "s == s1+s2" : "split mismatch");
        Params params2{{"identity", "S-split"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        bool ok2 = Scap_poly(n, k) == S1cap_poly(n, k) + S2cap_poly(n, k);
        r.add(params2, ok2 ? PointStatus::ExactPass : PointStatus::Fail, ok2 ? "S == S1+S2" : "split mismatch");
      }
      // identity 2: charpoly(theta2) - charpoly(theta1(0,k-6)) == -8 (x+1)^{n-7} s
      {
        Params params{{"identity", "theta2-vs-theta1(0,k-6)-8s"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        IntPoly diff = cache.theta2_poly(n, k) - cache.theta1_poly(n, k, 0);
        IntPoly expect = BigInt(-8) * (pow(IntPoly::x_plus(1), n - 7) * s_poly(n, k));
        r.add(params, diff == expect ? PointStatus::ExactPass : PointStatus::Fail,
              diff == expect ? "exact" : first_diff(diff, expect));
      }
      // identity 3: charpoly(theta2) - charpoly(theta1(k-6,0)) == -16 (x+1)^{n-7} S
      {
        Params params{{"identity", "theta2-vs-theta1(k-6,0)-16S"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        IntPoly diff = cache.theta2_poly(n, k) - cache.theta1_poly(n, k, k - 6);
        IntPoly expect = BigInt(-16) * (pow(IntPoly::x_plus(1), n - 7) * Scap_poly(n, k));
        r.add(params, diff == expect ? PointStatus::ExactPass : PointStatus::Fail,
              diff == expect ? "exact" : first_diff(diff, expect));
      }
    }
  r.wall_ms = timer.ms();
  return r;
}

VerificationReport verify_appendix_signs(const std::vector<int>& ns, const std::vector<int>& ks) {
  Timer timer;
  VerificationReport r;
  r.claim = "difference-polynomial-sign-conclusions";
  TheoremRegion region;
  r.notes.push_back(
      "expanded closed-form displays are compared informationally; the gating facts are the strict signs");
  for (int k : ks)
    for (int n : ns) {
      if (n < k) continue;
      const bool assert_mode = region.assertion_mode(n, k);
      const int u = n - k + 1;
      const BigInt N = n, K = k;
      auto judged = [&](bool ok) {
        return assert_mode ? (ok ? PointStatus::ExactPass : PointStatus::Fail) : PointStatus::Info;
      };
      for (int s = 0; s <= k - 6; ++s) {
        const int t = k - 6 - s;
        const BigInt S = s, T = t, U = u;
        if (s <= t + 2) {
          BigInt val = p1_poly(s, t, u).evaluate(BigInt(n - 4)) + p2_poly(s, t, u).evaluate(BigInt(n - 1));
          Params params{{"check", "p1(n-4)+p2(n-1)<0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                        {"s", std::to_string(s)}};
          r.add(params, judged(val < 0), "value = " + val.str());
          int sg = sign_at_max_root(p_poly(s, t, u), F_poly(n, k, s));
          Params params2{{"check", "p(lambda1)<0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                         {"s", std::to_string(s)}};
          r.add(params2, judged(sg < 0), "sign at largest root of F = " + std::to_string(sg));
          // informational: printed cubic expansion for this combination
          BigInt rhs = (S - T - 2) * (K - 15) * N * N * N + (S - T - 2) * (2 * K * K * K + 40 * K * K - 158 * K + 119) -
                       8 * K * K + 64 * K - 128;
          Params params3{{"check", "closed-form p1(n-4)+p2(n-1)"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                         {"s", std::to_string(s)}};
          r.add(params3, PointStatus::Info,
                val == rhs ? "matches expansion" : "delta = " + BigInt(val - rhs).str());
        } else {
          BigInt val = P1cap_poly(s, t, u).evaluate(BigInt(n - 1)) + P2cap_poly(s, t, u).evaluate(BigInt(n - 4));
          Params params{{"check", "P1(n-1)+P2(n-4)>0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                        {"s", std::to_string(s)}};
          r.add(params, judged(val > 0), "value = " + val.str());
          int sg = sign_at_max_root(p_poly(s, t, u), F_poly(n, k, s - 1));
          Params params2{{"check", "p(lambda*)>0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                         {"s", std::to_string(s)}};
          r.add(params2, judged(sg > 0), "sign at largest root of F(s-1) = " + std::to_string(sg));
          BigInt rhs = (K - 15) * (S - T - 2) * N * N * N + (2 * K * K + 34 * K - 108) * N + 16 * (S - T - 1) * U +
                       3 * S - 3 * T - 6;
          Params params3{{"check", "closed-form P1(n-1)+P2(n-4)"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                         {"s", std::to_string(s)}};
          r.add(params3, PointStatus::Info,
                val == rhs ? "matches expansion" : "delta = " + BigInt(val - rhs).str());
        }
      }
      {
        BigInt val = s1_poly(n, k).evaluate(BigInt(n - 3)) + s2_poly(n, k).evaluate(BigInt(n - 1));
        Params params{{"check", "s1(n-3)+s2(n-1)>0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        r.add(params, judged(val > 0), "value = " + val.str());
        int sg = sign_at_max_root(s_poly(n, k), F_poly(n, k, 0));
        Params params2{{"check", "s(lambda1)>0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        r.add(params2, judged(sg > 0), "sign at largest root of F(0) = " + std::to_string(sg));
        BigInt rhs = (K * K - 19 * K + 64) * N * N * N + (2 * K * K * K + 28 * K * K - 238 * K + 120) * N + 80 * K + 88;
        r.add({{"check", "closed-form s1(n-3)+s2(n-1)"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}},
              PointStatus::Info, val == rhs ? "matches expansion" : "delta = " + BigInt(val - rhs).str());
      }
      {
        BigInt val = S1cap_poly(n, k).evaluate(BigInt(n - 4)) + S2cap_poly(n, k).evaluate(BigInt(n - 1));
        Params params{{"check", "S1(n-4)+S2(n-1)>0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        r.add(params, judged(val > 0), "value = " + val.str());
        int sg = sign_at_max_root(Scap_poly(n, k), F_poly(n, k, k - 6));
        Params params2{{"check", "S(lambda1)>0"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
        r.add(params2, judged(sg > 0), "sign at largest root of F(k-6) = " + std::to_string(sg));
        BigInt rhs = (K - 5) * N * N * N * N + (82 - 16 * K) * N * N * N + (2 * K * K + 56 * K - 292) * N * N +
                     (448 - 162 * K) * N + 129 * K - 147;
        r.add({{"check", "closed-form S1(n-4)+S2(n-1)"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}},
              PointStatus::Info, val == rhs ? "matches expansion" : "delta = " + BigInt(val - rhs).str());
      }
    }
  r.wall_ms = timer.ms();
  return r;
}

VerificationReport verify_ordering_lemma(int n, int k) {
  Timer timer;
  VerificationReport r;
  r.claim = "ordering-over-pendant-splits";
  TheoremRegion region;
  const bool assert_mode = region.assertion_mode(n, k);
  if (k < 6 || n < k) throw std::invalid_argument("verify_ordering_lemma: need k >= 6 and n >= k");
  std::vector<RootInterval> roots;
  for (int s = 0; s <= k - 6; ++s) {
    roots.push_back(max_real_root(F_poly(n, k, s), rat_eps(12)));
    r.add({{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"s", std::to_string(s)},
           {"t", std::to_string(k - 6 - s)}},
          PointStatus::Info, "lambda1 in " + interval_str(roots.back()));
  }
  int m = k - 6;
  // extreme = the larger of s=0 and s=k-6; interior max over 1..k-7
  bool zero_is_best = m == 0 || roots[0].lo >= roots[m].lo;
  const RootInterval& ext = zero_is_best ? roots[0] : roots[m];
  BigRat margin{1};
  bool ok = true;
  std::string why;
  if (m >= 2) {
    BigRat best_interior = roots[1].hi;
    int best_s = 1;
    for (int s = 2; s <= m - 1; ++s)
      if (roots[s].hi > best_interior) {
        best_interior = roots[s].hi;
        best_s = s;
      }
    margin = ext.lo - best_interior;
    ok = margin > rat_eps(9);
    why = "extreme s=" + std::string(zero_is_best ? "0" : std::to_string(m)) +
          ", margin over interior s=" + std::to_string(best_s) + " >= " + format_double(static_cast<double>(margin));
  } else {
    why = "no interior split points";
  }
  r.add({{"n", std::to_string(n)}, {"k", std::to_string(k)}},
        ok ? (assert_mode ? PointStatus::ExactPass : PointStatus::Info) : PointStatus::Fail, why);
  r.wall_ms = timer.ms();
  return r;
}

VerificationReport verify_theta2_dominates(int n, int k) {
  Timer timer;
  VerificationReport r;
  r.claim = "theta2-dominates-theta1-extremes";
  TheoremRegion region;
  const bool assert_mode = region.assertion_mode(n, k);
  if (k < 6 || n < k) throw std::invalid_argument("verify_theta2_dominates: need k >= 6 and n >= k");
  for (int s : {0, k - 6}) {
    Params params{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"vs", "theta1 s=" + std::to_string(s)}};
    bool decided = false;
    for (int e = 12; e <= 30 && !decided; e += 6) {
      RootInterval rp = max_real_root(P_poly(n, k), rat_eps(e));
      RootInterval rf = max_real_root(F_poly(n, k, s), rat_eps(e));
      if (rp.lo > rf.hi) {
        r.add(params, assert_mode ? PointStatus::ExactPass : PointStatus::Info,
              "P root " + interval_str(rp) + " above F root " + interval_str(rf) + ", margin >= " +
                  format_double(static_cast<double>(rp.lo - rf.hi)));
        decided = true;
      } else if (rf.lo > rp.hi) {
        r.add(params, PointStatus::Fail, "F root above P root");
        decided = true;
      }
    }
    if (!decided) {
      int cmp = compare_max_roots(P_poly(n, k), F_poly(n, k, s));
      r.add(params, cmp > 0 ? (assert_mode ? PointStatus::ExactPass : PointStatus::Info) : PointStatus::Fail,
            cmp > 0 ? "decided by exact root comparison" : "largest roots compare " + std::to_string(cmp));
    }
  }
  r.wall_ms = timer.ms();
  return r;
}

VerificationReport verify_bounds(const std::vector<int>& ns, const std::vector<int>& ks) {
  Timer timer;
  VerificationReport r;
  r.claim = "index-bounds";
  const double tol = 1e-8, upper_margin = 1e-9;
  for (int n : ns)
    for (int k : ks) {
      if (n < k) continue;
      for (int s = 0; s <= k - 6; ++s) {
        double lam = index(theta1(n, s, k - 6 - s)).first;
        Params params{{"family", "theta1"}, {"n", std::to_string(n)}, {"k", std::to_string(k)},
                      {"s", std::to_string(s)}};
        double lower = std::max(index_lower_bound(n, k), n - 4);
        if (s == 0) lower = std::max(lower, static_cast<double>(n - 3));
        bool ok = lam >= lower - tol && lam <= (n - 1) - upper_margin;
        r.add(params, ok ? PointStatus::NumericPass : PointStatus::Fail,
              "lambda1 = " + format_double(lam) + " in [" + format_double(lower) + " - tol, n-1)");
      }
      double lam = index(theta2(n, k)).first;
      Params params{{"family", "theta2"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
      bool ok = lam >= index_lower_bound(n, k) - tol && lam <= (n - 1) - upper_margin;
      r.add(params, ok ? PointStatus::NumericPass : PointStatus::Fail,
            "lambda1 = " + format_double(lam) + " in [n-k+1 - tol, n-1)");
    }
  r.wall_ms = timer.ms();
  return r;
}

TheoremResult verify_theorem(int n, int k, int workers) {
  Timer timer;
  TheoremResult out;
  out.assertion_mode = TheoremRegion{}.assertion_mode(n, k);
  VerificationReport& r = out.report;
  r.claim = "argmax-over-bicyclic-negative-parts";
  r.notes.push_back("assertion region: k >= 15 and n >= k + 20; the reversed bound k <= 15 appearing in one "
                    "statement of the claim is treated as a misprint");
  if (k < 7 || n < k) throw std::invalid_argument("verify_theorem: need k >= 7 and n >= k");

  auto certs = enumerate_bicyclic_certificates(k - 1);
  out.classes = static_cast<int>(certs.size());
  std::vector<double> lambda(certs.size());
  std::vector<double> residual(certs.size());
  std::vector<unsigned char> ok_bounds(certs.size(), 1);
  parallel_for(certs.size(), workers, [&](std::size_t i) {
    SignedCompleteGraph g = embed(graph6_decode(certs[i]), n);
    QuotientIndexResult q = index_via_quotient(g);
    lambda[i] = q.lambda1;
    residual[i] = q.residual;
    bool b = q.residual <= 1e-10 * n && q.lambda1 >= (n - k + 1) - 1e-8 && q.lambda1 <= (n - 1) - 1e-9;
    ok_bounds[i] = b ? 1 : 0;
  });

  for (std::size_t i = 0; i < certs.size(); ++i)
    if (!ok_bounds[i])
      r.add({{"certificate", certs[i]}}, PointStatus::Fail,
            "residual/bounds violation: lambda1 = " + format_double(lambda[i]) +
                ", residual = " + format_double(residual[i]));

  std::size_t best = 0;
  for (std::size_t i = 1; i < certs.size(); ++i)
    if (lambda[i] > lambda[best]) best = i;

  // near-ties against the numeric winner get an exact ranking
  std::vector<std::size_t> contenders;
  for (std::size_t i = 0; i < certs.size(); ++i)
    if (lambda[best] - lambda[i] <= 1e-8) contenders.push_back(i);

  std::size_t winner = best;
  bool unique = true;
  if (contenders.size() > 1) {
    auto quotient_char_poly = [&](std::size_t i) {
      SignedCompleteGraph g = embed(graph6_decode(certs[i]), n);
      SpecialPartition pi;
      int support = graph6_decode(certs[i]).vertex_count();
      for (int v = 0; v < support; ++v) pi.blocks.push_back({v});
      if (n > support) {
        std::vector<int> filler;
        for (int v = support; v < n; ++v) filler.push_back(v);
        pi.blocks.push_back(std::move(filler));
      }
      pi.positive_count = static_cast<int>(pi.blocks.size());
      return char_poly_exact(quotient_matrix(g, pi));
    };
    std::map<std::size_t, IntPoly> polys;
    for (auto i : contenders) polys.emplace(i, quotient_char_poly(i));
    winner = contenders[0];
    for (std::size_t j = 1; j < contenders.size(); ++j) {
      int cmp = compare_max_roots(polys.at(contenders[j]), polys.at(winner));
      if (cmp > 0) winner = contenders[j];
    }
    for (auto i : contenders)
      if (i != winner && compare_max_roots(polys.at(i), polys.at(winner)) == 0) {
        unique = false;
        r.add({{"certificate", certs[i]}}, out.assertion_mode ? PointStatus::Fail : PointStatus::Info,
              "exact tie with the winner");
      }
    r.notes.push_back("near-tie set of size " + std::to_string(contenders.size()) + " resolved exactly");
  }

  out.winner_certificate = certs[winner];
  auto expected_b = drop_isolated(theta2(n, k).negative_part()).first;
  out.expected_certificate = canonical_form(expected_b).certificate;

  std::vector<std::size_t> order(certs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b2) {
    if (lambda[a] != lambda[b2]) return lambda[a] > lambda[b2];
    return certs[a] < certs[b2];
  });
  for (std::size_t i = 0; i < order.size() && i < 10; ++i)
    out.top.push_back({certs[order[i]], lambda[order[i]], lambda[winner] - lambda[order[i]]});
  if (order.size() >= 2) {
    std::size_t runner = order[0] == winner ? order[1] : order[0];
    out.runner_up_margin = lambda[winner] - lambda[runner];
  }

  bool winner_is_expected = out.winner_certificate == out.expected_certificate;
  Params params{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"classes", std::to_string(out.classes)}};
  std::string detail = "winner = " + out.winner_certificate + ", lambda1 = " + format_double(lambda[winner]) +
                       ", runner-up margin = " + format_double(out.runner_up_margin) +
                       (winner_is_expected ? " (matches theta2)" : " (NOT theta2)");
  if (out.assertion_mode)
    r.add(params, (winner_is_expected && unique) ? PointStatus::NumericPass : PointStatus::Fail, detail);
  else
    r.add(params, PointStatus::Info, detail);
  r.wall_ms = timer.ms();
  return out;
}

std::string ranking_to_csv(const TheoremResult& r) {
  std::ostringstream os;
  os << "rank,certificate,lambda1,margin_to_winner\n";
  int rank = 1;
  for (const auto& row : r.top)
    os << rank++ << "," << row.certificate << "," << format_double(row.lambda1) << ","
       << format_double(row.margin_to_winner) << "\n";
  return os.str();
}

}  // namespace theta
