#include "theta/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

namespace {

// Pseudo-remainder scaled by a positive constant: r ~ rem(f, g) up to a
// positive factor, content-stripped.
IntPoly signed_prem(const IntPoly& f, const IntPoly& g) {
  IntPoly r = f;
  const int dg = g.degree();
  const BigInt& lg = g.leading();
  int steps = 0;  // r gets one factor of lg per reduction step
  while (!r.is_zero() && r.degree() >= dg) {
    int shift = r.degree() - dg;
    BigInt c = r.leading();
    std::vector<BigInt> out(static_cast<std::size_t>(r.degree()) + 1);
    // lg * r - c * x^shift * g
    for (int i = 0; i <= r.degree(); ++i) out[i] = lg * r.coeff(i);
    for (int i = 0; i <= dg; ++i) out[i + shift] -= c * g.coeff(i);
    r = IntPoly(std::move(out));
    ++steps;
  }
  if (lg < 0 && steps % 2 == 1) r = -r;
  return r.primitive_part();
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
  seq_.push_back(p.primitive_part());
  if (p.degree() >= 1) seq_.push_back(p.derivative().primitive_part());
  while (seq_.size() >= 2 && !seq_.back().is_zero() && seq_.back().degree() >= 1) {
    IntPoly next = -signed_prem(seq_[seq_.size() - 2], seq_.back());
    if (next.is_zero()) break;
    seq_.push_back(std::move(next));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const BigRat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& f : seq_) signs.push_back(sign_of(f.evaluate(x)));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& f : seq_) signs.push_back(sign_of(f.leading()));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& f : seq_) {
    int s = sign_of(f.leading());
    if (f.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::count_roots(const BigRat& a, const BigRat& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_above(const BigRat& a) const {
  return variations_at(a) - variations_at_pos_inf();
}

int SturmChain::count_real_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

BigRat cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
  BigInt mx{0};
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, BigInt(boost::multiprecision::abs(p.coeff(i))));
  return BigRat(1) + BigRat(mx, boost::multiprecision::abs(p.leading()));
}

namespace {

BigInt rat_floor(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && num % den != 0) q -= 1;
  return q;
}

// Smallest-denominator rational in [a, b] (a <= b), by continued fractions.
BigRat simplest_rational_in(const BigRat& a, const BigRat& b) {
  BigInt fl = rat_floor(a);
  BigInt ca = (BigRat(fl) == a) ? fl : fl + 1;  // ceil
  if (BigRat(ca) <= b) return BigRat(ca);
  BigRat ra = a - BigRat(fl), rb = b - BigRat(fl);  // 0 < ra <= rb < 1
  return BigRat(fl) + 1 / simplest_rational_in(1 / rb, 1 / ra);
}

}  // namespace

RootInterval max_real_root(const IntPoly& p, const BigRat& eps) {
  if (p.is_zero()) throw std::domain_error("max_real_root: zero polynomial");
  if (eps <= 0) throw std::domain_error("max_real_root: eps must be positive");
  if (p.degree() == 0) throw std::domain_error("max_real_root: no real root");
  SturmChain chain(p);
  BigRat bound = cauchy_root_bound(p);
  BigRat lo = -bound, hi = bound;
  if (chain.count_roots(lo, hi) == 0) throw std::domain_error("max_real_root: no real root");
  // Invariant: the largest root lies in (lo, hi] and none lies above hi.
  while (hi - lo > eps) {
    BigRat mid = (lo + hi) / 2;
    if (p.evaluate(mid) == 0 && chain.count_roots_above(mid) == 0) return {mid, mid};
    if (chain.count_roots(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  // A rational largest root collapses to a point.
  BigRat s = simplest_rational_in(lo, hi);
  if (p.evaluate(s) == 0 && chain.count_roots(s, hi) == 0) return {s, s};
  return {lo, hi};
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly f = a.primitive_part(), g = b.primitive_part();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPoly r = signed_prem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.is_zero() && f.leading() < 0) f = -f;
  return f;
}

int compare_max_roots(const IntPoly& p, const IntPoly& q) {
  SturmChain cp(p), cq(q);
  auto isolate = [](const IntPoly& poly, const SturmChain& chain) {
    BigRat bound = cauchy_root_bound(poly);
    BigRat lo = -bound, hi = bound;
    if (chain.count_roots(lo, hi) == 0) throw std::domain_error("compare_max_roots: no real root");
    // Shrink until (lo, hi] holds exactly the largest root.
    while (chain.count_roots(lo, hi) > 1) {
      BigRat mid = (lo + hi) / 2;
      if (chain.count_roots(mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
    return RootInterval{lo, hi};
  };
  RootInterval ip = isolate(p, cp), iq = isolate(q, cq);
  IntPoly g = poly_gcd(p, q);
  const bool g_nontrivial = g.degree() >= 1;
  SturmChain cg = g_nontrivial ? SturmChain(g) : SturmChain(IntPoly::constant(1));
  auto halve = [](RootInterval& iv, const SturmChain& chain) {
    BigRat mid = (iv.lo + iv.hi) / 2;
    if (chain.count_roots(mid, iv.hi) >= 1)
      iv.lo = mid;
    else
      iv.hi = mid;
  };
  while (true) {
    if (ip.lo >= iq.hi) return 1;   // p's root in (ip.lo, ip.hi], q's <= iq.hi <= ip.lo
    if (iq.lo >= ip.hi) return -1;
    BigRat olo = std::max(ip.lo, iq.lo), ohi = std::min(ip.hi, iq.hi);
    if (g_nontrivial && olo < ohi && cg.count_roots(olo, ohi) >= 1) return 0;
    halve(ip, cp);
    halve(iq, cq);
  }
}

}  // namespace theta
