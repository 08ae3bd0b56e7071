#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"

namespace lionsweep {

// Edge-list text format:
//   vertices <N>
//   <u> <v>        one edge per line, 0-indexed
// Lines starting with '#' and blank lines are ignored.

inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    if (!vertex_count) {
      std::string keyword;
      long long n = -1;
      std::string extra;
      if (!(fields >> keyword >> n) || keyword != "vertices" || (fields >> extra)) {
        throw ParseError(line_no, "expected header 'vertices <N>'");
      }
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      vertex_count = static_cast<std::size_t>(n);
      continue;
    }

    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw ParseError(line_no, "expected '<u> <v>'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *vertex_count ||
        static_cast<std::size_t>(v) >= *vertex_count) {
      throw ParseError(line_no, "vertex out of range");
    }
    if (u == v) throw ParseError(line_no, "self-loop");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!vertex_count) throw ParseError(line_no + 1, "missing 'vertices <N>' header");
  return Graph(*vertex_count, edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return read_graph(in);
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_parameter, "cannot write " + path);
  write_graph(out, g);
}

}  // namespace lionsweep
