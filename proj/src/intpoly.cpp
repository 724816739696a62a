#include "theta/intpoly.hpp"

#include <sstream>

#include "json.hpp"

namespace theta {

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc{0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::evaluate(const BigRat& x) const {
  BigRat acc{0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return IntPoly();
  BigInt g{0};
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  if (g == 0 || g == 1) return *this;
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = boost::multiprecision::abs(c);
    if (i == 0 || a != 1) os << a.str();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) { return BigInt(-1) * a; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& k, const IntPoly& p) {
  std::vector<BigInt> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * p.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& p, int e) {
  if (e < 0) throw std::domain_error("pow: negative exponent");
  IntPoly acc = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree())
    throw DivisionRemainderError("divide_exact: degree(a) < degree(b), remainder = a", a);
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(a.degree() - b.degree() + 1);
  const BigInt& lead = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0)
      throw DivisionRemainderError("divide_exact: leading coefficient does not divide", IntPoly(rem));
    BigInt q = rem[i] / lead;
    quot[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b.coeff(j);
  }
  IntPoly r{std::move(rem)};
  if (!r.is_zero())
    throw DivisionRemainderError("divide_exact: nonzero remainder " + r.to_string(), r);
  return IntPoly(std::move(quot));
}

std::string poly_to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr.dump();
}

IntPoly poly_from_json(const std::string& json) {
  nlohmann::json arr = nlohmann::json::parse(json);
  if (!arr.is_array()) throw std::invalid_argument("poly_from_json: expected array");
  std::vector<BigInt> c;
  c.reserve(arr.size());
  for (const auto& item : arr) c.emplace_back(item.get<std::string>());
  return IntPoly(std::move(c));
}

}  // namespace theta
