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

// Small independent oracles for the unit tests. Everything here is
// deliberately naive so it cannot share a bug with the library code it
// checks.

#ifndef KFOLD_TESTS_TEST_UTIL_HPP
#define KFOLD_TESTS_TEST_UTIL_HPP

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace kfold_test {

inline std::vector<std::uint64_t> adjacency_masks(const kfold::Graph& g) {
  auto n = static_cast<int>(g.vertex_count());
  if (n > 63) {
    throw std::runtime_error("test oracle limited to 63 vertices");
  }
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.adjacent(i, j)) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      }
    }
  }
  return adj;
}

inline int max_stable_rec(std::uint64_t candidates,
                          const std::vector<std::uint64_t>& adj) {
  if (candidates == 0) {
    return 0;
  }
  int v = std::countr_zero(candidates);
  std::uint64_t bit = std::uint64_t{1} << v;
  int without = max_stable_rec(candidates & ~bit, adj);
  int with = 1 + max_stable_rec(
                     candidates & ~bit & ~adj[static_cast<std::size_t>(v)],
                     adj);
  return std::max(without, with);
}

/// Exact stability number by plain branching.
inline int brute_alpha(const kfold::Graph& g) {
  auto adj = adjacency_masks(g);
  auto n = static_cast<int>(g.vertex_count());
  std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return max_stable_rec(all, adj);
}

/// Exact clique number: stability number of the complement.
inline int brute_omega(const kfold::Graph& g) {
  auto n = static_cast<int>(g.vertex_count());
  kfold::Graph comp(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) {
        comp.add_edge(i, j);
      }
    }
  }
  return brute_alpha(comp);
}

/// Every stable set (not just maximal ones) of a graph on <= 16
/// vertices, by subset enumeration.
inline std::vector<std::uint32_t> all_stable_sets(const kfold::Graph& g) {
  auto n = static_cast<int>(g.vertex_count());
  if (n > 16) {
    throw std::runtime_error("all_stable_sets limited to 16 vertices");
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool stable = true;
    for (std::uint32_t m = mask; stable && m != 0; m &= m - 1) {
      int i = std::countr_zero(m);
      for (std::uint32_t m2 = m & (m - 1); m2 != 0; m2 &= m2 - 1) {
        if (g.adjacent(i, std::countr_zero(m2))) {
          stable = false;
          break;
        }
      }
    }
    if (stable) {
      out.push_back(mask);
    }
  }
  return out;
}

namespace detail {

inline void multicover_dfs(const std::vector<std::uint32_t>& sets,
                           std::vector<int>& deficit, int total, int used,
                           int* best) {
  if (total == 0) {
    *best = std::min(*best, used);
    return;
  }
  int max_size = 1;
  for (std::uint32_t s : sets) {
    max_size = std::max(max_size, std::popcount(s));
  }
  if (used + (total + max_size - 1) / max_size >= *best) {
    return;
  }
  int v = 0;
  while (deficit[static_cast<std::size_t>(v)] == 0) {
    ++v;
  }
  for (std::uint32_t s : sets) {
    if (!(s & (std::uint32_t{1} << v))) {
      continue;
    }
    std::vector<int> touched;
    for (std::uint32_t m = s; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      if (deficit[static_cast<std::size_t>(u)] > 0) {
        --deficit[static_cast<std::size_t>(u)];
        --total;
        touched.push_back(u);
      }
    }
    multicover_dfs(sets, deficit, total, used + 1, best);
    for (int u : touched) {
      ++deficit[static_cast<std::size_t>(u)];
      ++total;
    }
  }
}

}  // namespace detail

/// Exact chi_k over an explicit collection of allowed classes; used to
/// confirm that restricting the library search to maximal sets is sound.
inline int multicover_optimum(const kfold::Graph& g,
                              const std::vector<std::uint32_t>& sets,
                              int k) {
  auto n = static_cast<int>(g.vertex_count());
  if (n == 0) {
    return 0;
  }
  std::vector<int> deficit(static_cast<std::size_t>(n), k);
  int best = n * k + 1;  // singletons always work
  detail::multicover_dfs(sets, deficit, n * k, 0, &best);
  return best;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the built CLI with the given arguments, capturing stdout.
inline CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(KFOLD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + cmd);
  }
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status))
                         ? WEXITSTATUS(status)
                         : -1;
  return result;
}

}  // namespace kfold_test

#endif  // KFOLD_TESTS_TEST_UTIL_HPP
