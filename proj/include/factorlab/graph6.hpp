#pragma once

#include <string>
#include <string_view>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Decode one graph6 line. An optional ">>graph6<<" header and trailing
/// newline/carriage return are accepted. Throws ParseError naming the byte
/// offset of the first offending character.
Graph parse_graph6(std::string_view line);

/// Encode without header or newline.
std::string encode_graph6(const Graph& g);

/// Read a graph from text that is either a graph6 line or an edge list.
Graph parse_graph_text(const std::string& text);

}  // namespace factorlab
