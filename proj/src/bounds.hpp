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

#ifndef KFOLD_BOUNDS_HPP
#define KFOLD_BOUNDS_HPP

#include <cstdint>

#include "families.hpp"

namespace kfold {

/// chi_k next to its classical companions k*omega <= chi_k <= k*chi, the
/// fractional chromatic number n/alpha (exact, reduced), and the
/// stability lower bound ceil(k*n/alpha), with tightness verdicts.
struct BoundsReport {
  FamilyParams params;
  std::int64_t k = 0;
  std::int64_t k_omega = 0;
  std::int64_t chi_k = 0;
  std::int64_t k_chi = 0;
  std::int64_t lex_lower = 0;  // ceil(k*n/alpha); equals chi_k here
  std::int64_t frac_num = 0;   // reduced n/alpha
  std::int64_t frac_den = 0;
  bool tight_omega = false;  // chi_k == k*omega  <=>  p divides n
  bool tight_chi = false;    // chi_k == k*chi
  bool tight_frac = false;   // chi_k == k*(n/alpha)
};

BoundsReport bounds_report(const FamilyParams& params, std::int64_t k);

/// Strictness of the sandwich bounds under the divisibility hypotheses
/// on n-1: upper_strict means chi_k < k*chi is guaranteed (alpha divides
/// n-1, alpha > 1, k > 1); lower_strict likewise for k*omega < chi_k
/// (p divides n-1, p > 1, k > 1).
struct StrictnessFlags {
  bool upper_strict = false;
  bool lower_strict = false;
};

StrictnessFlags strictness_check(const FamilyParams& params, std::int64_t k);

}  // namespace kfold

#endif  // KFOLD_BOUNDS_HPP
