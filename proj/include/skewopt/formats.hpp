#pragma once

#include <string>
#include <string_view>

#include "skewopt/graph.hpp"
#include "skewopt/orientation.hpp"

namespace skewopt {

// graph6, bit-exact per the standard: 63-offset printable bytes, upper
// triangle in column order. No trailing newline.
std::string to_graph6(const UndirectedGraph& g);
UndirectedGraph from_graph6(std::string_view text);

// Plain edge list: first line "n m", then m lines "u v", 1-based.
std::string to_edge_list(const UndirectedGraph& g);
UndirectedGraph from_edge_list(std::string_view text);

// Signed graph format: line 1 "n m k", then m lines "u v s" with 1-based
// vertices and s in {1, -1}; s = +1 means the arc u -> v. Edges are written
// sorted with u < v, which is the normalized form the round-trip guarantee
// speaks about. k is the maximum degree.
std::string to_sgf(const Orientation& o);
Orientation from_sgf(std::string_view text);
int sgf_header_k(std::string_view text);

// File helpers; format picked by extension (.g6/.graph6, .edges/.el, .sgf).
UndirectedGraph read_graph_file(const std::string& path);
Orientation read_sgf_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace skewopt
