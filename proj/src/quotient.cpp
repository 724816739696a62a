#include "theta/quotient.hpp"

#include <algorithm>

#include "json.hpp"
#include "theta/intmatrix.hpp"

namespace theta {

namespace {

void check_is_partition(const SignedCompleteGraph& g, const SpecialPartition& pi) {
  if (pi.positive_count < 0 || pi.positive_count > static_cast<int>(pi.blocks.size()))
    throw std::invalid_argument("special partition: positive_count out of range");
  std::vector<int> seen(g.order(), 0);
  for (const auto& block : pi.blocks) {
    if (block.empty()) throw std::invalid_argument("special partition: empty block");
    for (int v : block) {
      if (v < 0 || v >= g.order()) throw std::invalid_argument("special partition: vertex out of range");
      if (seen[v]++) throw std::invalid_argument("special partition: vertex in two blocks");
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (!seen[v]) throw std::invalid_argument("special partition: vertex not covered");
}

}  // namespace

std::optional<PartitionViolation> validate_special_partition(const SignedCompleteGraph& g,
                                                             const SpecialPartition& pi) {
  check_is_partition(g, pi);
  const int m = static_cast<int>(pi.blocks.size());
  for (int i = 0; i < m; ++i) {
    const int want = i < pi.positive_count ? 1 : -1;
    const auto& bl = pi.blocks[i];
    for (std::size_t a = 0; a < bl.size(); ++a)
      for (std::size_t b = a + 1; b < bl.size(); ++b)
        if (g.sign(bl[a], bl[b]) != want)
          return PartitionViolation{
              want > 0 ? "positive block contains a negative edge" : "negative block contains a positive edge",
              i, -1, bl[a], bl[b]};
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int expect = g.sign(pi.blocks[i][0], pi.blocks[j][0]);
      for (int u : pi.blocks[i])
        for (int v : pi.blocks[j])
          if (g.sign(u, v) != expect)
            return PartitionViolation{"cross-block signs are not constant", i, j, u, v};
    }
  return std::nullopt;
}

IntMatrix quotient_matrix(const SignedCompleteGraph& g, const SpecialPartition& pi) {
  if (auto bad = validate_special_partition(g, pi))
    throw std::invalid_argument("quotient_matrix: invalid special partition: " + bad->what);
  const int m = static_cast<int>(pi.blocks.size());
  IntMatrix q(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // Average row sum of the (i, j) block, kept exact.
      BigInt total{0};
      for (int u : pi.blocks[i])
        for (int v : pi.blocks[j])
          total += g.sign(u, v);
      BigInt rows{static_cast<int>(pi.blocks[i].size())};
      if (total % rows != 0) throw std::logic_error("quotient_matrix: non-integer average row sum");
      q.at(i, j) = total / rows;
    }
  return q;
}

IntPoly char_poly_from_quotient(const SignedCompleteGraph& g, const SpecialPartition& pi) {
  IntMatrix q = quotient_matrix(g, pi);
  int pos_excess = 0, neg_excess = 0;
  for (std::size_t i = 0; i < pi.blocks.size(); ++i) {
    int sz = static_cast<int>(pi.blocks[i].size());
    if (static_cast<int>(i) < pi.positive_count)
      pos_excess += sz - 1;
    else
      neg_excess += sz - 1;
  }
  return pow(IntPoly::x_plus(1), pos_excess) * pow(IntPoly::x_plus(-1), neg_excess) * char_poly_exact(q);
}

std::string partition_to_json(const SpecialPartition& pi) {
  nlohmann::ordered_json j;
  j["p"] = pi.positive_count;
  auto blocks = nlohmann::json::array();
  for (const auto& b : pi.blocks) {
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    blocks.push_back(sorted);
  }
  j["blocks"] = blocks;
  return j.dump();
}

SpecialPartition partition_from_json(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  SpecialPartition pi;
  pi.positive_count = j.at("p").get<int>();
  for (const auto& b : j.at("blocks")) pi.blocks.push_back(b.get<std::vector<int>>());
  return pi;
}

}  // namespace theta
