#pragma once

#include <functional>
#include <string>
#include <vector>

#include "theta/canonical.hpp"
#include "theta/graph.hpp"

namespace theta {

/// All rooted trees on m vertices (one per isomorphism class), each returned
/// as a parent array with parent[0] = -1 (vertex 0 is the root).
std::vector<std::vector<int>> rooted_trees(int m);

/// Certificates of all connected bicyclic graphs on v vertices, one per
/// isomorphism class, sorted. Covers both base shapes (theta and dumbbell)
/// extended by all rooted forests.
std::vector<std::string> enumerate_bicyclic_certificates(int v);

/// Streams the classes in certificate order.
void enumerate_bicyclic(int v, const std::function<void(const CanonicalGraph&)>& yield);

/// Places b's vertices on indices 0..|V(b)|-1 of K_n as the negative part.
SignedCompleteGraph embed(const SimpleGraph& b, int n);

}  // namespace theta
