#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "blockpd/graph.hpp"

namespace blockpd {

// Text instance format (LF line endings, 1-based vertex ids):
//
//   c <comment>
//   p pdom <n> <m>
//   w <vertex> <weight>     exactly n lines, every vertex once
//   e <u> <v>               exactly m lines, u != v
//
// Lines starting with 'c' and empty lines are ignored.

// Throws Error(kParseError) for malformed input and the build_graph errors
// for invalid edges or weights.
WeightedGraph parse_instance(std::istream& in);
WeightedGraph parse_instance(std::string_view text);
WeightedGraph read_instance_file(const std::string& path);

// Writes `comments` as c-lines, then the header, the weights in vertex
// order and the edges as (u, v) with u < v in increasing order.
void write_instance(std::ostream& out, const WeightedGraph& g,
                    const std::vector<std::string>& comments = {});

}  // namespace blockpd
