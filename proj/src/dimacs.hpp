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

#ifndef KFOLD_DIMACS_HPP
#define KFOLD_DIMACS_HPP

#include <string>

#include "graph.hpp"

namespace kfold {

/// DIMACS .col text: "p edge n m" then one "e i j" line per edge with
/// 1-based endpoints, i < j, in lexicographic order.
std::string write_dimacs(const Graph& g);

/// Parses DIMACS .col text. Accepts comment lines ("c ..."), requires a
/// "p edge n m" header before any edge, and tolerates duplicate edges.
/// Throws kfold::parse_error on malformed input.
Graph read_dimacs(const std::string& text);

}  // namespace kfold

#endif  // KFOLD_DIMACS_HPP
