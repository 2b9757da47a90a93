#pragma once

#include <string>
#include <string_view>

#include "specfactor/graph.hpp"

namespace specfactor {

// graph6 byte encoding: order header (short form for n <= 62, '~' + 3 bytes
// for larger), then the upper adjacency triangle in column order
// (0,1),(0,2),(1,2),(0,3),..., packed 6 bits per byte, each byte offset by 63.
// Throws std::invalid_argument on malformed input (bad header, bad byte,
// wrong length, nonzero padding) and capacity_error for orders above 64.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

} // namespace specfactor
