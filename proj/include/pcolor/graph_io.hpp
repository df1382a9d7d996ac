#pragma once

#include <string>
#include <string_view>

#include "pcolor/graph.hpp"

namespace pcolor {

// Graph file:    "n m" then m lines "u v" (written with u < v in
//                lexicographic order; any order accepted on read).
// Coloring file: "k" then one "u v c" line per edge of the graph, 1 <= c <= k.
// Blank lines and surrounding whitespace are ignored on read.

Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

EdgeColoring read_coloring(const Graph& g, std::string_view text);
std::string write_coloring(const Graph& g, const EdgeColoring& coloring);

std::string read_text_file(const std::string& path);
/// Writes to "<path>.tmp" and renames it over `path`.
void write_text_file_atomic(const std::string& path, std::string_view contents);

}  // namespace pcolor
