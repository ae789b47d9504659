#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strucnet/graph.hpp"

namespace strucnet {

/// Raised for malformed graph or system files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Parses a graph document.
 *
 *  Format: {"nodes": [label, ...], "edges": [...]} where each edge is
 *  either a pair [from, to] or {"from": .., "to": .., "bidir": bool}.
 *  A bidir edge expands to both directions at parse time (a bidir
 *  self-loop contributes a single edge). Duplicate labels, duplicate
 *  edges and unknown labels are errors.
 */
StructureGraph parse_graph(std::string_view text);

/// Reads and parses the file at `path`.
StructureGraph load_graph_file(const std::string& path);

/// Canonical document for g; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const StructureGraph& g);

/** Graphviz rendering. Bottle nodes are filled blue, neck nodes red and
 *  nodes in both sets violet; remaining nodes are unfilled.
 */
std::string to_dot(const StructureGraph& g,
                   const std::vector<int>& bottle = {},
                   const std::vector<int>& neck = {});

}  // namespace strucnet
