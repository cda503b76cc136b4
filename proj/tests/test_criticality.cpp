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

#include "criticality.hpp"

#include <doctest.h>

#include "coloring.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"

using kfold::chi_k_antiweb_minus_v;
using kfold::chi_k_web_minus_v;
using kfold::CritWitness;
using kfold::Family;
using kfold::FamilyParams;

namespace {

FamilyParams web(std::int64_t n, std::int64_t p) {
  return FamilyParams{Family::Web, n, p};
}

FamilyParams antiweb(std::int64_t n, std::int64_t p) {
  return FamilyParams{Family::Antiweb, n, p};
}

// Exact chi_k of the family graph with vertex v removed.
std::int64_t oracle_minus_v(const FamilyParams& params, std::int64_t v,
                            std::int64_t k) {
  auto g = kfold::materialize(params);
  return kfold::exact_chi_k(kfold::delete_vertex(g, v).graph, k);
}

}  // namespace

TEST_SUITE_BEGIN("criticality");

TEST_CASE("deleted-vertex values for webs") {
  CHECK(chi_k_web_minus_v(5, 2, 1) == 2);  // a path on 4 vertices
  CHECK(chi_k_web_minus_v(6, 2, 1) == 3);  // gcd branch, unchanged
  CHECK(chi_k_web_minus_v(5, 2, 3) == 6);

  CHECK(oracle_minus_v(web(5, 2), 0, 1) == 2);
  CHECK(oracle_minus_v(web(6, 2), 0, 1) == 3);
  CHECK(oracle_minus_v(web(5, 2), 0, 3) == 6);
}

TEST_CASE("deleted-vertex values for antiwebs") {
  CHECK(chi_k_antiweb_minus_v(10, 3, 2) == 6);
  CHECK(chi_k_antiweb_minus_v(8, 4, 5) == 20);  // p | n branch, alpha = 2
  CHECK(chi_k_antiweb_minus_v(8, 3, 2) == 7);

  CHECK(oracle_minus_v(antiweb(10, 3), 0, 2) == 6);
  CHECK(oracle_minus_v(antiweb(8, 3), 0, 2) == 7);
}

TEST_CASE("criticality verdicts on worked instances") {
  auto c5 = kfold::is_chik_critical(web(5, 2), 1);
  CHECK(c5.critical);
  CHECK(c5.witness == CritWitness::Decomposition);
  CHECK(c5.witness_a == 1);
  CHECK(c5.witness_b == 0);

  for (std::int64_t k = 1; k <= 6; ++k) {
    auto report = kfold::is_chik_critical(web(6, 2), k);
    CHECK_FALSE(report.critical);
    CHECK(report.witness == CritWitness::GcdBranch);
  }

  CHECK_FALSE(kfold::is_chik_critical(antiweb(8, 3), 1).critical);
  CHECK(kfold::is_chik_critical(antiweb(8, 3), 2).critical);
}

TEST_CASE("cliques are critical for every k") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t k = 1; k <= 8; ++k) {
      REQUIRE(kfold::is_chik_critical(web(n, 1), k).critical);
    }
  }
}

// A decomposition that needs a negative b: alpha = 5, gcd(n, alpha) = 1,
// t_star = 3, so k = 4 only factors as 3*3 + (-1)*5.
TEST_CASE("antiweb decomposition with negative b") {
  CHECK(kfold::t_star(17, 5) == 3);
  auto report = kfold::is_chik_critical(antiweb(17, 3), 4);
  CHECK(report.critical);
  CHECK(report.witness == CritWitness::Decomposition);
  CHECK(report.witness_a == 3);
  CHECK(report.witness_b == -1);
}

TEST_CASE("chi-star verdicts") {
  CHECK(kfold::is_chistar_critical(web(5, 2)).critical);
  CHECK(kfold::is_chistar_critical(antiweb(7, 3)).critical);
  CHECK_FALSE(kfold::is_chistar_critical(antiweb(8, 3)).critical);
}

TEST_CASE("gap bounds on worked instances") {
  auto bounds = kfold::criticality_gap_bounds(web(5, 2), 4);
  CHECK(bounds.lo == 2);
  CHECK(bounds.hi == 2);
  CHECK(kfold::chi_k(web(5, 2), 4) - chi_k_web_minus_v(5, 2, 4) == 2);

  bounds = kfold::criticality_gap_bounds(web(6, 2), 7);
  CHECK(bounds.lo == 0);
  CHECK(bounds.hi == 0);

  bounds = kfold::criticality_gap_bounds(antiweb(10, 3), 2);
  CHECK(bounds.lo == 0);
  CHECK(bounds.hi == 1);
  CHECK(kfold::chi_k(antiweb(10, 3), 2) - chi_k_antiweb_minus_v(10, 3, 2) ==
        1);
}

// The report computes the verdict from the arithmetic characterization
// and from the chromatic numbers, and throws if they ever disagree; the
// sweep exercises that cross-check everywhere.
TEST_CASE("characterization and formulas agree across the board") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
      for (auto family : {Family::Web, Family::Antiweb}) {
        FamilyParams params{family, n, p};
        for (std::int64_t k = 1; k <= 8; ++k) {
          auto report = kfold::is_chik_critical(params, k);
          REQUIRE(report.critical ==
                  (report.chi_k_minus_v < report.chi_k));
          std::int64_t gap = report.chi_k - report.chi_k_minus_v;
          REQUIRE(report.gap_bounds.lo <= gap);
          REQUIRE(gap <= report.gap_bounds.hi);
        }
      }
    }
  }
}

TEST_CASE("deleted-vertex value is vertex-independent and exact") {
  for (std::int64_t n = 4; n <= 8; ++n) {
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
      for (auto family : {Family::Web, Family::Antiweb}) {
        FamilyParams params{family, n, p};
        for (std::int64_t k = 1; k <= 2; ++k) {
          std::int64_t expected = kfold::chi_k_minus_v(params, k);
          for (std::int64_t v = 0; v < n; ++v) {
            REQUIRE(oracle_minus_v(params, v, k) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("chi-star, chi-1 criticality and alpha | n-1 coincide") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
      for (auto family : {Family::Web, Family::Antiweb}) {
        FamilyParams params{family, n, p};
        bool star = kfold::is_chistar_critical(params).critical;
        REQUIRE(star == ((n - 1) % kfold::alpha(params) == 0));
        REQUIRE(star == kfold::is_chik_critical(params, 1).critical);
        if (star) {
          for (std::int64_t k = 1; k <= 8; ++k) {
            REQUIRE(kfold::is_chik_critical(params, k).critical);
          }
        }
      }
    }
  }
}

// Deleting a vertex can never free a full private palette once k >= 2:
// the gap stays at most ceil(k/2) < k.
TEST_CASE("no private palettes beyond cliques") {
  auto gap_of = [](const FamilyParams& params, std::int64_t k) {
    return kfold::chi_k(params, k) - kfold::chi_k_minus_v(params, k);
  };
  for (std::int64_t n = 2; n <= 24; ++n) {
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
      for (std::int64_t k = 2; k <= 8; ++k) {
        if (p >= 2) {
          std::int64_t gap = gap_of(web(n, p), k);
          REQUIRE(gap <= kfold::ceil_div(k, 2));
          REQUIRE(gap < k);
        }
        std::int64_t gap = gap_of(antiweb(n, p), k);
        REQUIRE(gap <= kfold::ceil_div(k, 2));
        REQUIRE(gap < k);
      }
    }
  }
}

// The threshold-or-decomposition form and the fractional-part form of
// the characterization pick out the same (params, k) pairs.
TEST_CASE("both characterization variants agree") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
      for (std::int64_t k = 1; k <= 8; ++k) {
        {
          FamilyParams params = web(n, p);
          auto report = kfold::is_chik_critical(params, k);
          if (kfold::gcd(n, p) == 1) {
            std::int64_t t = kfold::t_star(n, p);
            std::int64_t r = (n * k) % p;
            bool fractional = k >= p * t || (r > 0 && k >= r * t);
            REQUIRE(report.critical == fractional);
          } else {
            REQUIRE_FALSE(report.critical);
          }
        }
        {
          FamilyParams params = antiweb(n, p);
          auto report = kfold::is_chik_critical(params, k);
          std::int64_t a = kfold::alpha(params);
          if (n % p != 0) {
            std::int64_t r = (n * k) % a;
            bool fractional = k >= a || (r > 0 && k >= r);
            REQUIRE(report.critical == fractional);
          } else {
            REQUIRE_FALSE(report.critical);
          }
        }
      }
    }
  }
}

TEST_SUITE_END();
