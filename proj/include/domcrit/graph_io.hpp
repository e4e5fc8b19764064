#pragma once

#include <string>
#include <string_view>

#include "domcrit/graph.hpp"

namespace domcrit {

/// Standard graph6: big-endian upper-triangle bit packing, 6 bits per
/// printable character offset 63, long-form size prefix for n > 62.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);  // throws on malformed input or n > 128

/// Plain edge-list text: first line "n m", then m lines "u v" (0-indexed).
/// '#' starts a comment anywhere on a line; blank lines are skipped.
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view text);

}  // namespace domcrit
