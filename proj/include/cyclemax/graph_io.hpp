#pragma once

#include "cyclemax/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace cyclemax {

enum class GraphFormat { automatic, edge_list, graph6 };

// "n m" then m lines "u v", zero-indexed.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// One graph per string; an optional ">>graph6<<" header is accepted.
Graph read_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

GraphFormat detect_format(std::string_view text);
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

}
