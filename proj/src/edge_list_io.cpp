#include "ado/edge_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "ado/error.hpp"

namespace ado {

namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& why) {
  fail(ErrorKind::format, "edge list line " + std::to_string(line_no) + ": " + why);
}

// Parses exactly two unsigned integers; anything else on the line is an error.
bool parse_pair(const std::string& line, unsigned long long& a, unsigned long long& b) {
  std::istringstream ss(line);
  std::string rest;
  if (!(ss >> a >> b)) {
    return false;
  }
  if (line.find('-') != std::string::npos) {
    return false;
  }
  return !(ss >> rest);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned long long n = 0;
  unsigned long long m = 0;
  std::vector<Edge> edges;
  std::unordered_set<unsigned long long> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) {
      continue;
    }
    unsigned long long a = 0;
    unsigned long long b = 0;
    if (!parse_pair(line, a, b)) {
      parse_error(line_no, have_header ? "expected `u v`" : "expected header `n m`");
    }
    if (!have_header) {
      if (a >= kNoVertex) {
        parse_error(line_no, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<unsigned long long>(m, 1ull << 26)));
      continue;
    }
    if (a >= n || b >= n) {
      parse_error(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (a == b) {
      parse_error(line_no, "self-loop");
    }
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    if (!seen.insert(lo * n + hi).second) {
      parse_error(line_no, "duplicate edge");
    }
    if (edges.size() == m) {
      parse_error(line_no, "more edges than declared in header");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) {
    fail(ErrorKind::format, "edge list: missing header `n m`");
  }
  if (edges.size() != m) {
    fail(ErrorKind::format, "edge list: header declares " + std::to_string(m) +
                                " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::io, "cannot open " + path);
  }
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::io, "cannot write " + path);
  }
  write_edge_list(out, g);
  if (!out) {
    fail(ErrorKind::io, "write failed for " + path);
  }
}

}  // namespace ado
