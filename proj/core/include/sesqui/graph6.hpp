#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

/// Largest order representable by the 4-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Standard graph6: N(n) followed by the upper triangle x(0,1), x(0,2),
/// x(1,2), x(0,3), ... packed six bits per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Throws Graph6Error (with byte offset) on a bad header, a byte outside
/// 63..126, a length mismatch, or nonzero padding bits.
Graph graph6_decode(std::string_view text);

/// One graph per non-blank line; an optional leading ">>graph6<<" marker
/// and trailing '\r' are accepted.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace sesqui
