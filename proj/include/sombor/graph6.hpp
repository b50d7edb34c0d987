#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Decodes one graph6 record (no ">>graph6<<" header). Only single-byte
/// sizes (n <= 62) are supported. Throws MalformedHeaderError,
/// TruncatedBitsError or NonCanonicalPaddingError.
Graph parse_graph6(std::string_view record);

/// Encodes a graph as a canonical graph6 record: byte n+63 followed by the
/// upper-triangle bits in column-major order, packed 6 per byte (+63) with
/// zero padding. Throws TooLargeError for n > 62.
std::string write_graph6(const Graph& g);

/// Strips an optional leading ">>graph6<<" header and surrounding
/// whitespace/CR from one input line. Returns an empty view for lines that
/// carry no record.
std::string_view strip_graph6_line(std::string_view line);

/// Reads every graph6 record from a stream, one per line.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Edge-list text format: a record is a line "n m" followed by m lines
/// "u v". Records repeat until end of input; blank lines between records
/// are ignored. Throws Error subtypes with the offending line number in
/// the message.
std::vector<Graph> read_edge_list_stream(std::istream& in);

std::string write_edge_list(const Graph& g);

} // namespace sombor
