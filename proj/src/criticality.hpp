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

#ifndef KFOLD_CRITICALITY_HPP
#define KFOLD_CRITICALITY_HPP

#include <cstdint>
#include <string>

#include "families.hpp"

namespace kfold {

/// chi_k of the web minus any one vertex (the value is the same for
/// every vertex): ceil(k*n/p) when gcd(n,p) != 1, otherwise
/// ceil((k*n - floor(k/t_star(n,p))) / p).
std::int64_t chi_k_web_minus_v(std::int64_t n, std::int64_t p,
                               std::int64_t k);

/// chi_k of the antiweb minus any one vertex: ceil(k*n/alpha) when p
/// divides n, otherwise ceil(k*(n-1)/alpha).
std::int64_t chi_k_antiweb_minus_v(std::int64_t n, std::int64_t p,
                                   std::int64_t k);

std::int64_t chi_k_minus_v(const FamilyParams& params, std::int64_t k);

/// Which branch of the criticality characterization decided the verdict.
enum class CritWitness {
  GcdBranch,        // web: gcd(n,p) != 1; antiweb: p divides n -> never critical
  ThresholdBranch,  // web: k >= p*t_star; antiweb: k >= alpha
  Decomposition,    // k = a*t_star + b*p (web) or a*t_star + b*q (antiweb)
  NoDecomposition,  // below threshold and no admissible (a, b) exists
};

struct GapBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct CriticalityReport {
  FamilyParams params;
  std::int64_t k = 0;
  std::int64_t chi_k = 0;
  std::int64_t chi_k_minus_v = 0;
  bool critical = false;
  CritWitness witness = CritWitness::GcdBranch;
  std::int64_t witness_a = 0;  // set when witness == Decomposition
  std::int64_t witness_b = 0;
  GapBounds gap_bounds;

  std::string witness_text() const;
};

/// Decides chi_k-criticality twice: by the arithmetic characterization
/// and by comparing chi_k with the deleted-vertex value. The two must
/// agree; disagreement throws std::logic_error.
CriticalityReport is_chik_critical(const FamilyParams& params,
                                   std::int64_t k);

struct ChiStarReport {
  bool critical = false;
  std::string witness;
};

/// chi_k-critical for every k >= 1, which holds exactly when alpha
/// divides n-1.
ChiStarReport is_chistar_critical(const FamilyParams& params);

/// Bracket for chi_k(G) - chi_k(G-v): floor/ceil of k/(p*t_star) for webs
/// with gcd(n,p)=1, floor/ceil of k/alpha for antiwebs with p not
/// dividing n, and (0,0) otherwise.
GapBounds criticality_gap_bounds(const FamilyParams& params, std::int64_t k);

}  // namespace kfold

#endif  // KFOLD_CRITICALITY_HPP
