#pragma once

#include <string>
#include <string_view>

#include "symcol/graph.hpp"

namespace symcol {

/// Decode one graph6 record. A single trailing newline is tolerated; the
/// optional ">>graph6<<" header is not. Throws InputError when malformed.
Graph parse_graph6(std::string_view text);

/// Encode without header or newline. Orders up to 62 use the one-byte size
/// prefix, larger orders (up to 258047) the four-byte form.
std::string serialize_graph6(const Graph& g);

} // namespace symcol
