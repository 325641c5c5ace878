// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "connlap/graph.hpp"

namespace connlap {

/// Result of parsing an edge-list file. Input labels are arbitrary integers;
/// they are relabeled densely in order of first appearance, and
/// original_labels[i] is the input label that became vertex i.
struct ParsedGraph {
  Graph graph;
  std::vector<long long> original_labels;
};

/// Reads the text edge-list format: one "u v" pair per line; blank lines and
/// lines starting with '#' are ignored, except that the first "# name: <text>"
/// comment sets the graph name. A line holding a single label declares an
/// isolated vertex.
ParsedGraph read_graph(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);

/// Writes the edge list sorted, preceded by a name comment when the graph has
/// one. Isolated vertices are written as single-label lines.
void write_graph(std::ostream& out, const Graph& g);

}  // namespace connlap
