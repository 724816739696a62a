#include "theta/intmatrix.hpp"

namespace theta {

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const int n = a.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

BigInt trace(const IntMatrix& m) {
  BigInt t{0};
  for (int i = 0; i < m.size(); ++i) t += m.at(i, i);
  return t;
}

}  // namespace

IntPoly char_poly_exact(const IntMatrix& m) {
  const int n = m.size();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  if (n == 0) return IntPoly(std::move(c));

  // M_1 = A, c_{n-1} = -tr(M_1); M_k = A*(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  IntMatrix mk = m;
  c[n - 1] = -trace(mk);
  for (int k = 2; k <= n; ++k) {
    IntMatrix shifted = mk;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
    mk = multiply(m, shifted);
    BigInt t = trace(mk);
    if (t % k != 0) throw std::logic_error("char_poly_exact: inexact trace division");
    c[n - k] = -t / k;
  }
  return IntPoly(std::move(c));
}

}  // namespace theta
