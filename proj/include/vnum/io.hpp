#pragma once

#include "vnum/graph.hpp"
#include "vnum/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vnum {

// Text formats. Lines starting with '#' (or blank) are skipped; the first
// content line is "vertices <n>" resp. "vars <s>".
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings; // duplicate edges and the like
};
ParsedGraph parse_graph_text(std::string_view text);
MonomialIdeal parse_ideal_text(std::string_view text);

std::string serialize_graph(const Graph& g);
std::string serialize_ideal(const MonomialIdeal& I);

// Named generators.
Graph cycle_graph(int s);
Graph path_graph(int s);
Graph complete_graph(int s);
Graph t10_graph();       // 7-cycle plus the tail t1-t8-t9-t10 and chords t4-t10, t5-t10
Graph example52_graph(); // 6 vertices: a 4-cycle dominated by two nonadjacent vertices

// A graph argument is either a named generator ("cycle 7", "T10",
// "example52", "whisker <spec>", "path 4", "complete 5") or a file path.
struct GraphSpecResult {
    Graph graph;
    std::string description;
    std::vector<std::string> warnings;
};
GraphSpecResult resolve_graph_spec(const std::vector<std::string>& tokens);

std::string read_file(const std::string& path); // throws vnum::error when unreadable

} // namespace vnum
