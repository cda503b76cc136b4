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

#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "numtheory.hpp"

namespace kfold {

namespace {

std::int64_t env_vertex_limit(std::int64_t hard_cap) {
  const char* raw = std::getenv("KFOLD_ORACLE_LIMIT");
  if (raw == nullptr) {
    return hard_cap;
  }
  char* end = nullptr;
  long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    return hard_cap;  // unusable setting; keep the built-in cap
  }
  return std::min<std::int64_t>(hard_cap, value);
}

void check_vertex_cap(std::int64_t n, std::int64_t hard_cap,
                      const char* what) {
  std::int64_t cap = env_vertex_limit(hard_cap);
  if (n > cap) {
    throw too_large_error(std::string(what) + ": instance too large (" +
                          std::to_string(n) + " vertices, cap " +
                          std::to_string(cap) + ")");
  }
}

// Maximal cliques of the mask-encoded graph `adj` (Bron-Kerbosch with
// pivoting). Called on the complement, so the output is the maximal
// stable sets of the original graph.
void bron_kerbosch(std::uint32_t r, std::uint32_t p, std::uint32_t x,
                   const std::vector<std::uint32_t>& adj,
                   std::vector<std::uint32_t>* out) {
  if (p == 0 && x == 0) {
    out->push_back(r);
    return;
  }
  std::uint32_t px = p | x;
  int pivot = -1;
  int best_cover = -1;
  for (std::uint32_t m = px; m != 0; m &= m - 1) {
    int u = std::countr_zero(m);
    int cover = std::popcount(p & adj[static_cast<std::size_t>(u)]);
    if (cover > best_cover) {
      best_cover = cover;
      pivot = u;
    }
  }
  std::uint32_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
  for (std::uint32_t m = candidates; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    std::uint32_t bit = std::uint32_t{1} << v;
    bron_kerbosch(r | bit, p & adj[static_cast<std::size_t>(v)],
                  x & adj[static_cast<std::size_t>(v)], adj, out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<std::uint32_t> maximal_stable_set_masks(const Graph& g) {
  int n = static_cast<int>(g.vertex_count());
  std::vector<std::uint32_t> complement(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !g.adjacent(i, j)) {
        complement[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
      }
    }
  }
  std::vector<std::uint32_t> masks;
  if (n > 0) {
    std::uint32_t all = n == 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << n) - 1;
    bron_kerbosch(0, all, 0, complement, &masks);
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

// Depth-first multicover search over a fixed catalog.
class MulticoverSearch {
 public:
  MulticoverSearch(int n, std::int64_t k, std::vector<std::uint32_t> sets)
      : n_(n), sets_(std::move(sets)) {
    max_set_size_ = 1;
    for (std::uint32_t s : sets_) {
      max_set_size_ = std::max<std::int64_t>(max_set_size_, std::popcount(s));
    }
    sets_with_.resize(static_cast<std::size_t>(n_));
    for (std::size_t idx = 0; idx < sets_.size(); ++idx) {
      for (std::uint32_t m = sets_[idx]; m != 0; m &= m - 1) {
        sets_with_[static_cast<std::size_t>(std::countr_zero(m))].push_back(
            static_cast<int>(idx));
      }
    }
    deficit_.assign(static_cast<std::size_t>(n_), k);
    total_ = static_cast<std::int64_t>(n_) * k;
  }

  std::int64_t run() {
    std::int64_t root_lb = ceil_div(total_, max_set_size_);
    best_ = greedy();
    if (best_ > root_lb) {
      done_ = false;
      root_lb_ = root_lb;
      dfs(0);
    }
    return best_;
  }

 private:
  std::int64_t greedy() {
    std::vector<std::int64_t> deficit = deficit_;
    std::int64_t remaining = total_;
    std::int64_t used = 0;
    while (remaining > 0) {
      std::size_t pick = 0;
      std::int64_t pick_cover = -1;
      for (std::size_t idx = 0; idx < sets_.size(); ++idx) {
        std::int64_t cover = 0;
        for (std::uint32_t m = sets_[idx]; m != 0; m &= m - 1) {
          if (deficit[static_cast<std::size_t>(std::countr_zero(m))] > 0) {
            ++cover;
          }
        }
        if (cover > pick_cover) {
          pick_cover = cover;
          pick = idx;
        }
      }
      for (std::uint32_t m = sets_[pick]; m != 0; m &= m - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(m));
        if (deficit[v] > 0) {
          --deficit[v];
          --remaining;
        }
      }
      ++used;
    }
    return used;
  }

  void dfs(std::int64_t used) {
    if (total_ == 0) {
      best_ = used;
      done_ = best_ == root_lb_;  // cannot beat the root bound
      return;
    }
    if (used + ceil_div(total_, max_set_size_) >= best_) {
      return;
    }
    // Branch on the deficient vertex with the fewest candidate sets.
    int branch_vertex = -1;
    std::size_t branch_options = 0;
    for (int v = 0; v < n_; ++v) {
      if (deficit_[static_cast<std::size_t>(v)] == 0) {
        continue;
      }
      std::size_t options = sets_with_[static_cast<std::size_t>(v)].size();
      if (branch_vertex < 0 || options < branch_options) {
        branch_vertex = v;
        branch_options = options;
      }
    }
    for (int idx : sets_with_[static_cast<std::size_t>(branch_vertex)]) {
      std::uint32_t covered = apply(sets_[static_cast<std::size_t>(idx)]);
      dfs(used + 1);
      undo(covered);
      if (done_) {
        return;
      }
    }
  }

  // Decrements deficits under the set; returns the mask of vertices
  // actually decremented so the caller can undo.
  std::uint32_t apply(std::uint32_t set) {
    std::uint32_t covered = 0;
    for (std::uint32_t m = set; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      auto& d = deficit_[static_cast<std::size_t>(v)];
      if (d > 0) {
        --d;
        --total_;
        covered |= std::uint32_t{1} << v;
      }
    }
    return covered;
  }

  void undo(std::uint32_t covered) {
    for (std::uint32_t m = covered; m != 0; m &= m - 1) {
      ++deficit_[static_cast<std::size_t>(std::countr_zero(m))];
      ++total_;
    }
  }

  int n_;
  std::vector<std::uint32_t> sets_;
  std::vector<std::vector<int>> sets_with_;
  std::vector<std::int64_t> deficit_;
  std::int64_t total_ = 0;
  std::int64_t max_set_size_ = 1;
  std::int64_t best_ = 0;
  std::int64_t root_lb_ = 0;
  bool done_ = false;
};

}  // namespace

StableSetCatalog enumerate_maximal_stable_sets(const Graph& g) {
  check_vertex_cap(g.vertex_count(), kOracleEnumerateCap,
                   "enumerate_maximal_stable_sets");
  StableSetCatalog catalog;
  for (std::uint32_t mask : maximal_stable_set_masks(g)) {
    std::vector<std::int64_t> set;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      set.push_back(std::countr_zero(m));
    }
    catalog.sets.push_back(std::move(set));
  }
  return catalog;
}

std::int64_t exact_chi_k(const Graph& g, std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
  if (k > kOracleFoldCap) {
    throw too_large_error("exact_chi_k: k capped at " +
                          std::to_string(kOracleFoldCap) + ", got " +
                          std::to_string(k));
  }
  check_vertex_cap(g.vertex_count(), kOracleChiCap, "exact_chi_k");
  if (g.vertex_count() == 0) {
    return 0;
  }
  MulticoverSearch search(static_cast<int>(g.vertex_count()), k,
                          maximal_stable_set_masks(g));
  return search.run();
}

std::int64_t exact_chi_k_via_lex(const Graph& g, std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
  if (k > kOracleFoldCap) {
    throw too_large_error("exact_chi_k_via_lex: k capped at " +
                          std::to_string(kOracleFoldCap) + ", got " +
                          std::to_string(k));
  }
  check_vertex_cap(mul_checked(g.vertex_count(), k), kOracleChiCap,
                   "exact_chi_k_via_lex");
  return exact_chi_k(lex_product_with_clique(g, k), 1);
}

}  // namespace kfold
