#ifndef COCRIT_GRAPH6_HPP
#define COCRIT_GRAPH6_HPP

#include <string>
#include <string_view>

#include "cocrit/graph.hpp"

namespace cocrit {

class EdgeColoring;

// Header-less graph6 (the de-facto small-graph text format): vertex count
// followed by the upper triangle packed column by column, six bits per
// printable byte.
std::string encode_graph6(const Graph& g);

// Throws parse_error (with the offending byte offset) on malformed input,
// capability_error when the encoded graph exceeds kMaxVertices.
Graph decode_graph6(std::string_view s);

// Plain text edge list: one "u v" pair per line. A line holding a single
// integer fixes the vertex count (otherwise n = max endpoint + 1). Blank
// lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

// Graphviz export. When a coloring is supplied, edges carry
// color="red"/"blue" attributes; when roles are supplied, vertices are
// labelled with their role names.
std::string to_dot(const Graph& g, const EdgeColoring* coloring = nullptr,
    const VertexRoleMap* roles = nullptr);

} // namespace cocrit

#endif
