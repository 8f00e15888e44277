#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ridom/graph.hpp"

namespace ridom {

// graph6: printable encoding of the upper adjacency triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ...; six bits per byte, each byte offset by
// 63. Only the short form (n <= 62, single size byte) is supported; padding
// bits must be zero.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" (0-based). '#' starts
// a comment; blank lines are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace ridom
