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

#include "graph.hpp"

#include <stdexcept>
#include <string>

#include "numtheory.hpp"

namespace kfold {

Graph::Graph(std::int64_t vertex_count) : n_(vertex_count) {
  if (n_ < 0) {
    throw std::invalid_argument("vertex count must be >= 0, got " +
                                std::to_string(n_));
  }
  if (n_ > kMaxGraphVertices) {
    throw std::invalid_argument("graph too large: " + std::to_string(n_) +
                                " vertices exceeds the cap of " +
                                std::to_string(kMaxGraphVertices));
  }
  words_ = (n_ + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_ * words_), 0);
}

void Graph::check_vertex(std::int64_t v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex index " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) +
                                ")");
  }
}

void Graph::add_edge(std::int64_t i, std::int64_t j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
  }
  if (adjacent(i, j)) {
    return;
  }
  bits_[static_cast<std::size_t>(i * words_ + j / 64)] |=
      std::uint64_t{1} << (j % 64);
  bits_[static_cast<std::size_t>(j * words_ + i / 64)] |=
      std::uint64_t{1} << (i % 64);
  ++edges_;
}

bool Graph::adjacent(std::int64_t i, std::int64_t j) const {
  check_vertex(i);
  check_vertex(j);
  return (bits_[static_cast<std::size_t>(i * words_ + j / 64)] >> (j % 64)) &
         1;
}

DeletedGraph delete_vertex(const Graph& g, std::int64_t v) {
  std::int64_t n = g.vertex_count();
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex index " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) +
                                ")");
  }
  DeletedGraph out;
  out.graph = Graph(n - 1);
  out.original_labels.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t u = 0; u < n; ++u) {
    if (u != v) {
      out.original_labels.push_back(u);
    }
  }
  for (std::int64_t i = 0; i < n - 1; ++i) {
    for (std::int64_t j = i + 1; j < n - 1; ++j) {
      if (g.adjacent(out.original_labels[static_cast<std::size_t>(i)],
                     out.original_labels[static_cast<std::size_t>(j)])) {
        out.graph.add_edge(i, j);
      }
    }
  }
  return out;
}

Graph lex_product_with_clique(const Graph& g, std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
  std::int64_t n = g.vertex_count();
  std::int64_t product = mul_checked(n, k);
  if (product > kMaxGraphVertices) {
    throw std::invalid_argument(
        "lexicographic product too large: " + std::to_string(product) +
        " vertices exceeds the cap of " + std::to_string(kMaxGraphVertices));
  }
  Graph out(product);
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t a = 0; a < k; ++a) {
      for (std::int64_t b = a + 1; b < k; ++b) {
        out.add_edge(u * k + a, u * k + b);
      }
    }
    for (std::int64_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        continue;
      }
      for (std::int64_t a = 0; a < k; ++a) {
        for (std::int64_t b = 0; b < k; ++b) {
          out.add_edge(u * k + a, v * k + b);
        }
      }
    }
  }
  return out;
}

}  // namespace kfold
