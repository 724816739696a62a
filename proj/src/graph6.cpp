#include "theta/graph6.hpp"

#include <stdexcept>

namespace theta {

std::string graph6_encode(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6_encode: order too large");
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

SimpleGraph graph6_decode(const std::string& s) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("graph6_decode: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6_decode: byte out of range");
    return c - 63;
  };
  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  std::vector<Edge> edges;
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) edges.emplace_back(i, j);
      --bits;
    }
  if (pos != s.size()) throw std::invalid_argument("graph6_decode: trailing bytes");
  return SimpleGraph(n, std::move(edges));
}

}  // namespace theta
