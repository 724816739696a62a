#pragma once

#include <string>

#include "theta/graph.hpp"

namespace theta {

/// Standard graph6 encoding (byte offset 63, upper triangle column-major).
std::string graph6_encode(const SimpleGraph& g);
SimpleGraph graph6_decode(const std::string& s);

}  // namespace theta
