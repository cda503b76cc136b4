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

#ifndef KFOLD_COLORING_HPP
#define KFOLD_COLORING_HPP

#include <cstdint>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace kfold {

/// A k-fold coloring certificate: color c (1-based, c <= color_count) is
/// assigned to exactly the vertices of classes[c-1]. Classes are sorted
/// vertex sets; distinct colors may reuse the same vertex set.
struct KFoldColoring {
  std::int64_t color_count = 0;
  std::vector<std::vector<std::int64_t>> classes;

  /// Number of classes containing each vertex of 0..n-1.
  std::vector<std::int64_t> multiplicities(std::int64_t n) const;
};

/// A coloring plus the instance it certifies; the JSON interchange unit.
struct ColoringDocument {
  FamilyParams params;
  std::int64_t k = 0;
  KFoldColoring coloring;
};

/// The k-th chromatic number, ceil(k*n / alpha).
std::int64_t chi_k(const FamilyParams& params, std::int64_t k);

/// Optimal k-fold coloring of the web: color c covers the p consecutive
/// vertices starting at (c-1)*p mod n.
KFoldColoring color_web(std::int64_t n, std::int64_t p, std::int64_t k);

/// Optimal k-fold coloring of the antiweb: with k = l*alpha + i, the
/// rotations S_0..S_{ceil(i*n/alpha)-1} once plus S_0..S_{n-1} repeated l
/// times.
KFoldColoring color_antiweb(std::int64_t n, std::int64_t p, std::int64_t k);

KFoldColoring color(const FamilyParams& params, std::int64_t k);

struct VerifyReport {
  bool valid = false;
  bool multiplicity_ok = false;  // every vertex in >= k classes
  bool stability_ok = false;     // every class is a stable set
  std::int64_t color_count = 0;
  std::int64_t min_multiplicity = 0;
  std::int64_t first_deficient_vertex = -1;  // -1 when multiplicity_ok
  std::int64_t first_unstable_color = -1;    // 1-based color id, -1 when ok
};

/// Checks a coloring against a graph. Throws std::invalid_argument on a
/// malformed certificate (class count != color_count, vertex out of
/// range, duplicate vertex in a class).
VerifyReport verify_coloring(const Graph& g, const KFoldColoring& coloring,
                             std::int64_t k);

}  // namespace kfold

#endif  // KFOLD_COLORING_HPP
