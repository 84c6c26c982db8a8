#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

/// Malformed graph6 or edge-list text.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest order the 6-byte size header can carry.
inline constexpr std::size_t max_graph6_order = 68719476735ULL;

/// Decodes one graph6 line (trailing "\n" / "\r\n" and a leading ">>graph6<<"
/// header are accepted).
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// Reads every non-empty line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "u v" per line, 0-based. '#' starts a comment; blank lines are skipped.
/// The order is one more than the largest endpoint unless `order` is larger.
/// Structural problems (self-loops, duplicates) surface as GraphError.
Graph parse_edge_list(std::string_view text, std::size_t order = 0);

/// One "u v" line per edge (u < v, sorted). A header comment records the
/// order so that isolated trailing vertices survive a round trip.
std::string emit_edge_list(const Graph& g);

} // namespace limpack
