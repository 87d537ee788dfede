#pragma once

#include <string>
#include <string_view>

#include "lhamil/graph.hpp"

namespace lhamil {

/// Decodes one graph6 line (no trailing newline). Orders 63 and 64 use the
/// four-byte size prefix ("~" followed by 18 bits). Throws Graph6Error on a
/// bad size prefix, wrong body length, non-printable bytes or non-zero
/// padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes g; parse_graph6(write_graph6(g)) == g.
std::string write_graph6(const Graph& g);

}  // namespace lhamil
