// graph6 text codec and a human-editable edge-list format.
//
// graph6 (short form, n <= 62): one byte n+63, then the upper triangle of the
// adjacency matrix in column-major order -- bit (i,j) for j = 1..n-1, i < j --
// packed into 6-bit groups, most significant bit first, zero-padded, each
// group offset by 63 into the printable range 63..126.
//
// Edge-list text: optional '#' comment lines, a header line "n m", then m
// lines "u v" (0-based endpoints).
#pragma once

#include <stdexcept>
#include <string>

#include "liec/graph.hpp"

namespace liec {

struct Graph6ParseError : std::runtime_error {
    size_t byte_offset;
    Graph6ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);  // requires g.n <= 62

Graph parse_edge_list_text(const std::string& text);
std::string emit_edge_list_text(const Graph& g);

}  // namespace liec
