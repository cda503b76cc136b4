// Copyright 2026 The kfold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimacs.hpp"

#include <sstream>

#include "errors.hpp"

namespace kfold {

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::int64_t i = 0; i < g.vertex_count(); ++i) {
    for (std::int64_t j = i + 1; j < g.vertex_count(); ++j) {
      if (g.adjacent(i, j)) {
        out << "e " << i + 1 << ' ' << j + 1 << '\n';
      }
    }
  }
  return out.str();
}

Graph read_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool got_header = false;
  std::int64_t n = 0, declared_edges = 0, read_edges = 0;
  Graph g;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '\r') {
      continue;
    }
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (got_header) {
        throw parse_error("dimacs: duplicate header at line " +
                          std::to_string(line_no));
      }
      std::string format;
      fields >> format >> n >> declared_edges;
      if (!fields || (format != "edge" && format != "edges" &&
                      format != "col")) {
        throw parse_error("dimacs: bad header at line " +
                          std::to_string(line_no));
      }
      if (n < 0 || n > kMaxGraphVertices) {
        throw parse_error("dimacs: vertex count " + std::to_string(n) +
                          " out of range at line " + std::to_string(line_no));
      }
      g = Graph(n);
      got_header = true;
    } else if (tag == "e") {
      if (!got_header) {
        throw parse_error("dimacs: edge before header at line " +
                          std::to_string(line_no));
      }
      std::int64_t u = 0, v = 0;
      fields >> u >> v;
      if (!fields || u < 1 || v < 1 || u > n || v > n || u == v) {
        throw parse_error("dimacs: bad edge at line " +
                          std::to_string(line_no));
      }
      g.add_edge(u - 1, v - 1);
      ++read_edges;
    } else {
      throw parse_error("dimacs: unrecognized line " +
                        std::to_string(line_no) + " starting with '" + tag +
                        "'");
    }
  }
  if (!got_header) {
    throw parse_error("dimacs: missing 'p edge' header");
  }
  (void)read_edges;  // duplicates allowed, so no count check
  (void)declared_edges;
  return g;
}

}  // namespace kfold
