#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk {

struct graph6_error : std::runtime_error {
    explicit graph6_error(const std::string& what) : std::runtime_error(what) {}
};

/// Decodes one graph6 string (standard format: N(n) header, 6-bit packed
/// upper triangle in column order). Strict: rejects malformed headers,
/// truncated bit vectors, out-of-range characters and trailing garbage.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// One graph per non-empty line; a leading ">>graph6<<" marker is skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// Plain text format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);

std::string to_edge_list(const Graph& g);

}  // namespace twowalk
