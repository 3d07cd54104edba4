#pragma once

#include <iosfwd>
#include <string>

#include "ado/graph.hpp"

namespace ado {

// Text format: header `n m`, then m lines `u v`. Lines starting with '#'
// (after optional whitespace) and blank lines are ignored. Malformed input
// raises ErrorKind::format with the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace ado
