#pragma once

#include <string>
#include <vector>

#include "theta/graph.hpp"

namespace theta {

struct CanonicalGraph {
  SimpleGraph graph;                         // the input graph, untouched
  std::vector<Edge> canonical_edge_list;     // edges under the canonical labeling, sorted
  std::string certificate;                   // canonical graph6
};

/// Canonical labeling by iterative neighborhood refinement with branching on
/// the first smallest non-singleton cell; the certificate is the minimum
/// graph6 string over all discrete refinements, so isomorphic inputs agree.
/// Supports up to 64 vertices.
CanonicalGraph canonical_form(const SimpleGraph& g);

}  // namespace theta
