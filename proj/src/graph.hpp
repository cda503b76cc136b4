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

#ifndef KFOLD_GRAPH_HPP
#define KFOLD_GRAPH_HPP

#include <cstdint>
#include <vector>

namespace kfold {

// Densely stored graphs only; enough for every exact computation here.
inline constexpr std::int64_t kMaxGraphVertices = 4096;

/// Simple undirected graph on vertices 0..n-1 with a bitset adjacency
/// matrix. Immutable in spirit: build it, then only read it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::int64_t vertex_count);

  std::int64_t vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  void add_edge(std::int64_t i, std::int64_t j);
  bool adjacent(std::int64_t i, std::int64_t j) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(std::int64_t v) const;

  std::int64_t n_ = 0;
  std::int64_t words_ = 0;  // words per adjacency row
  std::int64_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A graph with one vertex removed; indices above the removed vertex are
/// shifted down, and original_labels maps new index -> old index.
struct DeletedGraph {
  Graph graph;
  std::vector<std::int64_t> original_labels;
};

DeletedGraph delete_vertex(const Graph& g, std::int64_t v);

/// Lexicographic product with a k-clique: every vertex becomes a
/// k-clique, and adjacent vertices' cliques are completely joined.
/// Vertex (u, a) maps to index u*k + a.
Graph lex_product_with_clique(const Graph& g, std::int64_t k);

}  // namespace kfold

#endif  // KFOLD_GRAPH_HPP
