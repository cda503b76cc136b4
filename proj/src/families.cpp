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

#include "families.hpp"

#include <cstdlib>
#include <stdexcept>

#include "numtheory.hpp"

namespace kfold {

namespace {

// (i + j) mod n, well-defined for negative offsets too.
std::int64_t wrap(std::int64_t i, std::int64_t j, std::int64_t n) {
  return (((i + j) % n) + n) % n;
}

bool web_adjacent(std::int64_t n, std::int64_t p, std::int64_t i,
                  std::int64_t j) {
  std::int64_t d = std::abs(i - j);
  return p <= d && d <= n - p;
}

}  // namespace

const char* family_name(Family family) {
  return family == Family::Web ? "web" : "antiweb";
}

Family family_from_name(std::string_view name) {
  if (name == "web") {
    return Family::Web;
  }
  if (name == "antiweb") {
    return Family::Antiweb;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected 'web' or 'antiweb')");
}

void FamilyParams::validate() const {
  if (p < 1) {
    throw std::invalid_argument("family parameter p must be >= 1, got " +
                                std::to_string(p));
  }
  if (n < 2 * p) {
    throw std::invalid_argument(
        "family parameter n must be >= 2p, got n=" + std::to_string(n) +
        ", p=" + std::to_string(p));
  }
  if (n > kFormulaProductLimit) {
    throw std::invalid_argument("family parameter n exceeds the supported "
                                "range (2^40)");
  }
}

bool adjacent(const FamilyParams& params, std::int64_t i, std::int64_t j) {
  params.validate();
  if (i < 0 || i >= params.n || j < 0 || j >= params.n) {
    throw std::invalid_argument("vertex index out of range [0, " +
                                std::to_string(params.n) + ")");
  }
  bool web = web_adjacent(params.n, params.p, i, j);
  return params.family == Family::Web ? web : (i != j && !web);
}

std::int64_t alpha(const FamilyParams& params) {
  params.validate();
  return params.family == Family::Web ? params.p : params.n / params.p;
}

std::int64_t omega(const FamilyParams& params) {
  params.validate();
  return params.family == Family::Web ? params.n / params.p : params.p;
}

std::vector<std::int64_t> stable_seq(const FamilyParams& params,
                                     std::int64_t i) {
  params.validate();
  std::vector<std::int64_t> seq;
  if (params.family == Family::Web) {
    seq.reserve(static_cast<std::size_t>(params.p));
    for (std::int64_t j = 0; j < params.p; ++j) {
      seq.push_back(wrap(i, j, params.n));
    }
  } else {
    std::int64_t a = params.n / params.p;
    seq.reserve(static_cast<std::size_t>(a));
    for (std::int64_t t = 0; t < a; ++t) {
      seq.push_back(wrap(ceil_div(mul_checked(t, params.n), a), i, params.n));
    }
  }
  return seq;
}

bool is_web_subgraph(std::int64_t inner_n, std::int64_t inner_p,
                     std::int64_t outer_n, std::int64_t outer_p) {
  FamilyParams{Family::Web, inner_n, inner_p}.validate();
  FamilyParams{Family::Web, outer_n, outer_p}.validate();
  return mul_checked(outer_n, inner_p) >= mul_checked(inner_n, outer_p) &&
         mul_checked(outer_n, inner_p - 1) <=
             mul_checked(inner_n, outer_p - 1);
}

Graph materialize(const FamilyParams& params) {
  params.validate();
  Graph g(params.n);
  for (std::int64_t i = 0; i < params.n; ++i) {
    for (std::int64_t j = i + 1; j < params.n; ++j) {
      if (adjacent(params, i, j)) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

}  // namespace kfold
