#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// A parsed edge-list document: the graph plus the bipartition forced by
/// optional "#X:" / "#Y:" header lines.
struct EdgeListDocument {
    Graph graph;
    std::optional<BipartitePartition> sides;
};

/// One edge per line as two whitespace-separated names; '#' lines are
/// comments except the "#X:" and "#Y:" headers. Vertices are numbered in
/// order of first appearance. Throws FormatError on loops, on lines that do
/// not hold exactly two names, and on edges that violate forced sides.
EdgeListDocument parse_edge_list(std::string_view text);

Graph parse_graph(std::string_view text);

/// Writes #X/#Y headers when `sides` is given, then one edge per line.
/// Isolated vertices only survive the round trip through the headers.
std::string write_edge_list(const Graph& g, const std::optional<BipartitePartition>& sides = std::nullopt);

}  // namespace edgeideal
