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

#ifndef KFOLD_ORACLE_HPP
#define KFOLD_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace kfold {

// Hard size caps of the exact search. The KFOLD_ORACLE_LIMIT environment
// variable may lower (never raise) the vertex caps.
inline constexpr std::int64_t kOracleEnumerateCap = 20;
inline constexpr std::int64_t kOracleChiCap = 16;
inline constexpr std::int64_t kOracleFoldCap = 4;

/// Every maximal stable set of a graph, each as a sorted vertex list,
/// ordered deterministically.
struct StableSetCatalog {
  std::vector<std::vector<std::int64_t>> sets;
};

/// Complete duplicate-free catalog via pivoting branch and bound on the
/// complement graph. Throws kfold::too_large_error past the vertex cap.
StableSetCatalog enumerate_maximal_stable_sets(const Graph& g);

/// Exact k-th chromatic number: the least number of (not necessarily
/// distinct) maximal stable sets covering every vertex at least k times.
/// Branch and bound; deterministic. Throws kfold::too_large_error past
/// the caps.
std::int64_t exact_chi_k(const Graph& g, std::int64_t k);

/// Same value via the lexicographic product with a k-clique: the 1-fold
/// chromatic number of g with every vertex blown up into a k-clique.
std::int64_t exact_chi_k_via_lex(const Graph& g, std::int64_t k);

}  // namespace kfold

#endif  // KFOLD_ORACLE_HPP
