#pragma once

#include <string>
#include <string_view>

#include "dspectra/graph.hpp"

namespace dspectra {

// graph6 short form: one printable line per graph. Byte 0 is N(n) = n + 63
// for 1 <= n <= 62; the upper triangle follows column-major, packed six
// bits per byte (MSB first), each group + 63. The long form ('~' marker)
// is rejected.
//
// An optional leading ">>graph6<<" header is stripped; parse errors name
// the offending byte offset (relative to the line after stripping).
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

// True if the line is nothing but a stream header or whitespace and
// should be skipped during corpus ingestion.
bool is_graph6_noise(std::string_view line);

// Strips an optional ">>graph6<<" prefix and a trailing '\r'.
std::string_view strip_graph6_header(std::string_view line);

}  // namespace dspectra
