#pragma once

#include <string>
#include <string_view>

#include "vertexenergy/graph.hpp"

namespace vertexenergy {

/// Largest graph order representable before the 8-byte graph6 header, which
/// this library does not support.
inline constexpr std::size_t kMaxGraph6Order = 258047;  // 2^18 - 1

/// Decodes one graph6 line (no trailing newline). Throws BadHeaderError,
/// TrailingDataError or UnsupportedOrderError on malformed input.
Graph parse_graph6(std::string_view text);

/// Encodes a graph as a single graph6 line: header chr(n+63) for n <= 62,
/// '~' + 3 bytes otherwise, then the upper-triangle bits packed 6 per byte
/// in column-major pair order, zero-padded.
std::string write_graph6(const Graph& g);

}  // namespace vertexenergy
