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

#ifndef KFOLD_FAMILIES_HPP
#define KFOLD_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace kfold {

// Web on n vertices: edges between vertices whose index distance lies in
// [p, n-p]. Antiweb: its complement.
enum class Family { Web, Antiweb };

const char* family_name(Family family);
Family family_from_name(std::string_view name);

struct FamilyParams {
  Family family = Family::Web;
  std::int64_t n = 0;
  std::int64_t p = 0;

  /// Throws std::invalid_argument unless p >= 1 and n >= 2p.
  void validate() const;
};

bool adjacent(const FamilyParams& params, std::int64_t i, std::int64_t j);

/// Stability number: p for webs, floor(n/p) for antiwebs.
std::int64_t alpha(const FamilyParams& params);

/// Clique number: floor(n/p) for webs, p for antiwebs.
std::int64_t omega(const FamilyParams& params);

/// The i-th rotation of the canonical maximum stable set, in rotation
/// order. Webs: <i, i+1, ..., i+p-1> mod n. Antiwebs: the ceil(t*n/alpha)
/// base sequence shifted by i. Any i is reduced modulo n.
std::vector<std::int64_t> stable_seq(const FamilyParams& params,
                                     std::int64_t i);

/// Trotter's condition for the (inner_n, inner_p) web being a subgraph of
/// the (outer_n, outer_p) web.
bool is_web_subgraph(std::int64_t inner_n, std::int64_t inner_p,
                     std::int64_t outer_n, std::int64_t outer_p);

/// Explicit adjacency-matrix form of the family graph.
Graph materialize(const FamilyParams& params);

}  // namespace kfold

#endif  // KFOLD_FAMILIES_HPP
