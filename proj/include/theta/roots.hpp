#pragma once

#include <vector>

#include "theta/intpoly.hpp"

namespace theta {

/// Rational interval (lo, hi] known to contain the largest real root; when
/// lo == hi the endpoint is the root exactly.
struct RootInterval {
  BigRat lo, hi;
  bool exact() const { return lo == hi; }
  BigRat width() const { return hi - lo; }
  double midpoint_double() const { return static_cast<double>(BigRat((lo + hi) / 2)); }
};

/// Sturm chain of p with exact sign-variation counting. Signs are preserved
/// through a primitive pseudo-remainder sequence, so all arithmetic stays in
/// the integers.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  int variations_at(const BigRat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Number of distinct real roots in (a, b], a <= b.
  int count_roots(const BigRat& a, const BigRat& b) const;
  int count_roots_above(const BigRat& a) const;
  int count_real_roots() const;

 private:
  std::vector<IntPoly> seq_;
};

/// 1 + max|c_i| / |c_lead|; every real root lies in (-bound, bound).
BigRat cauchy_root_bound(const IntPoly& p);

/// Isolates the largest real root to an interval of width <= eps by Sturm
/// bisection from the Cauchy bound. Throws std::domain_error when p is zero
/// or has no real root.
RootInterval max_real_root(const IntPoly& p, const BigRat& eps);

/// Primitive gcd over the integers (pseudo-remainder sequence).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Exact three-way comparison of the largest real roots of p and q
/// (-1, 0, +1). Both polynomials must have a real root.
int compare_max_roots(const IntPoly& p, const IntPoly& q);

}  // namespace theta
