#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/graph.hpp"
#include "theta/intpoly.hpp"

namespace theta {

/// Ordered vertex partition: the first `positive_count` blocks must induce
/// all-positive cliques, the rest all-negative cliques, and every cross pair
/// of blocks must be sign-constant.
struct SpecialPartition {
  std::vector<std::vector<int>> blocks;
  int positive_count = 0;  // p; q = blocks.size() - p

  int negative_count() const { return static_cast<int>(blocks.size()) - positive_count; }
};

struct PartitionViolation {
  std::string what;
  int block_i = -1, block_j = -1;  // offending block (pair); j == -1 for internal violations
  int u = -1, v = -1;              // example edge
};

/// nullopt on success. Throws std::invalid_argument when blocks do not
/// partition the vertex set.
std::optional<PartitionViolation> validate_special_partition(const SignedCompleteGraph& g,
                                                             const SpecialPartition& pi);

/// Equitable quotient matrix of the adjacency; every entry is asserted to be
/// an exact integer during construction. Throws on invalid partitions.
IntMatrix quotient_matrix(const SignedCompleteGraph& g, const SpecialPartition& pi);

/// (lambda+1)^{sum_i<=p n_i - p} (lambda-1)^{sum_i>p n_i - q} charpoly(Q).
IntPoly char_poly_from_quotient(const SignedCompleteGraph& g, const SpecialPartition& pi);

std::string partition_to_json(const SpecialPartition& pi);
SpecialPartition partition_from_json(const std::string& json);

}  // namespace theta
