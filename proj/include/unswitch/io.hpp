#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "unswitch/graph.hpp"
#include "unswitch/unswitchable.hpp"

namespace unswitch::io {

// "4,4,4,3,2,1" -> {4,4,4,3,2,1}. Whitespace around entries is ignored.
std::vector<int> parse_sequence(const std::string& text);

// Edge list:
//   # comment
//   n m
//   u v        (m lines, 0 <= u,v < n, either orientation)
// Blank lines and '#' lines are skipped anywhere. Throws ParseError with the
// offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Header then edges with u < v in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// Family:
//   n <value>
//   S<i>: v1 v2 ...   (1 <= i <= 2n; omitted indices are empty)
EggletonFamily read_family(std::istream& in);
EggletonFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const EggletonFamily& f);

// DOT text. When the graph is split, clique and independent vertices are
// placed in separate ranks.
void write_dot(std::ostream& out, const Graph& g);

// Corpus cache: "corpus <count>" followed by <count> edge-list blocks.
void write_corpus(std::ostream& out, std::span<const Graph> graphs);
std::vector<Graph> read_corpus(std::istream& in);

}  // namespace unswitch::io
