#include <cmath>

#include "doctest.h"
#include "theta/families.hpp"
#include "theta/roots.hpp"

using namespace theta;

namespace {
BigRat eps(int e) { return BigRat(BigInt(1), boost::multiprecision::pow(BigInt(10), e)); }
}  // namespace

TEST_CASE("max_real_root isolates sqrt(2)") {
  RootInterval iv = max_real_root(IntPoly({-2, 0, 1}), eps(9));
  CHECK(iv.width() <= eps(9));
  CHECK(std::fabs(iv.midpoint_double() - std::sqrt(2.0)) < 1e-9);
  // sign behavior across the interval (simple root)
  CHECK(IntPoly({-2, 0, 1}).evaluate(iv.lo) < 0);
  CHECK(IntPoly({-2, 0, 1}).evaluate(iv.hi) >= 0);
}

TEST_CASE("exact rational root is returned as a point") {
  // x - 9
  RootInterval iv = max_real_root(IntPoly({-9, 1}), eps(12));
  CHECK(iv.exact());
  CHECK(iv.lo == BigRat(9));
}

TEST_CASE("no real root reported") {
  CHECK_THROWS_AS(max_real_root(IntPoly({1, 0, 1}), eps(9)), std::domain_error);
  CHECK_THROWS_AS(max_real_root(IntPoly::constant(5), eps(9)), std::domain_error);
}

TEST_CASE("largest root picked when several exist") {
  // (x+3)(x-1)(x-2) = x^3 -7x + 6
  RootInterval iv = max_real_root(IntPoly({6, -7, 0, 1}), eps(12));
  CHECK(std::fabs(iv.midpoint_double() - 2.0) < 1e-10);
}

TEST_CASE("multiple root handled by Sturm counting") {
  // (x-1)^2
  RootInterval iv = max_real_root(IntPoly({1, -2, 1}), eps(10));
  CHECK(std::fabs(iv.midpoint_double() - 1.0) < 1e-9);
}

TEST_CASE("Sturm root counting") {
  // (x-1)(x-2)(x-3)
  SturmChain chain(IntPoly({-6, 11, -6, 1}));
  CHECK(chain.count_real_roots() == 3);
  CHECK(chain.count_roots(BigRat(0), BigRat(10)) == 3);
  CHECK(chain.count_roots(BigRat(3, 2), BigRat(5, 2)) == 1);
  CHECK(chain.count_roots_above(BigRat(5, 2)) == 1);
}

TEST_CASE("poly_gcd primitive") {
  IntPoly a = IntPoly::x_plus(-1) * IntPoly::x_plus(-2);
  IntPoly b = IntPoly::x_plus(-2) * IntPoly::x_plus(-3);
  CHECK(poly_gcd(a, b) == IntPoly::x_plus(-2));
  CHECK(poly_gcd(a, IntPoly::x_plus(5)).degree() == 0);
}

TEST_CASE("compare_max_roots") {
  IntPoly a({-2, 0, 1});  // sqrt 2
  IntPoly b({-3, 0, 1});  // sqrt 3
  CHECK(compare_max_roots(a, b) == -1);
  CHECK(compare_max_roots(b, a) == 1);
  CHECK(compare_max_roots(a, a) == 0);
  // shared top root, different cofactors
  IntPoly c = IntPoly::x_plus(-2) * IntPoly::x_plus(1);
  IntPoly d = IntPoly::x_plus(-2) * IntPoly::x_plus(5);
  CHECK(compare_max_roots(c, d) == 0);
  // very close but distinct roots: x-1 vs (10^9 x - 10^9 - 1)
  IntPoly e({-1, 1});
  IntPoly f({BigInt("-1000000001"), BigInt("1000000000")});
  CHECK(compare_max_roots(e, f) == -1);
}

TEST_CASE("frozen family root anchors") {
  RootInterval iv = max_real_root(P_poly(12, 8), eps(12));
  CHECK(std::fabs(iv.midpoint_double() - 9.411345879150233680) < 1e-11);
  RootInterval iv2 = max_real_root(P_poly(35, 15), eps(12));
  CHECK(std::fabs(iv2.midpoint_double() - 32.845707478533056855) < 1e-11);
}
