#pragma once

#include <stdexcept>
#include <vector>

#include "theta/bigint.hpp"
#include "theta/intpoly.hpp"

namespace theta {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::invalid_argument("IntMatrix: negative size");
  }
  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const BigInt& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<BigInt> a_;
};

/// det(lambda*I - m), monic of degree n, computed exactly by the
/// Faddeev-LeVerrier recurrence (all divisions exact over the integers).
IntPoly char_poly_exact(const IntMatrix& m);

}  // namespace theta
