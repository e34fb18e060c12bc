#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cliqueline/graph.hpp"

namespace cliqueline {

// Edge-list text format:
//
//   v <count>
//   u w
//   ...
//
// 0-based ids, whitespace separated. Blank lines and '#' comments are ignored.

Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

// Named graphs:
//
//   complete:5  cycle:6  path:3  star:4  wheel:5  prism:3
//   multipartite:3,3,2  circulant:8:1,3  petersen  bowtie
//   cone:<name>  suspension:<name>
//
// Throws ParseError for unknown names and InvalidArgument for bad sizes.
Graph named_graph(std::string_view spec);

}  // namespace cliqueline
