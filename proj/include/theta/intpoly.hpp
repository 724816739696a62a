#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/bigint.hpp"

namespace theta {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored ascending by degree. Normalized: the highest stored coefficient is
/// nonzero; the zero polynomial stores nothing (degree() == -1).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { normalize(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt v) { return IntPoly({std::move(v)}); }
  static IntPoly x() { return IntPoly({BigInt(0), BigInt(1)}); }
  /// x + c, handy for (lambda+1)-style factors.
  static IntPoly x_plus(BigInt c) { return IntPoly({std::move(c), BigInt(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int i) const {
    static const BigInt kZero{0};
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  BigInt evaluate(const BigInt& x) const;
  BigRat evaluate(const BigRat& x) const;
  IntPoly derivative() const;

  /// Divides every coefficient by its (positive) content; zero stays zero.
  IntPoly primitive_part() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& k, const IntPoly& p);

IntPoly pow(const IntPoly& p, int e);  // throws std::domain_error for e < 0

/// Exact division: thrown when b does not divide a.
class DivisionRemainderError : public std::runtime_error {
 public:
  DivisionRemainderError(std::string msg, IntPoly remainder)
      : std::runtime_error(std::move(msg)), remainder(std::move(remainder)) {}
  IntPoly remainder;
};

IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// JSON array of decimal coefficient strings, ascending degree.
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const std::string& json);

}  // namespace theta
