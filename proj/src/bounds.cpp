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

#include "bounds.hpp"

#include <stdexcept>

#include "coloring.hpp"
#include "numtheory.hpp"

namespace kfold {

BoundsReport bounds_report(const FamilyParams& params, std::int64_t k) {
  params.validate();
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }

  BoundsReport report;
  report.params = params;
  report.k = k;
  report.chi_k = chi_k(params, k);
  report.lex_lower = report.chi_k;
  report.k_omega = mul_guarded(k, omega(params));
  report.k_chi = mul_guarded(k, chi_k(params, 1));

  std::int64_t a = alpha(params);
  std::int64_t g = gcd(params.n, a);
  report.frac_num = params.n / g;
  report.frac_den = a / g;

  report.tight_omega = params.n % params.p == 0;
  std::int64_t r = params.n % a;
  // chi_k == k*chi iff r == 0 or k < alpha/(alpha - r), cross-multiplied.
  report.tight_chi = r == 0 || mul_checked(k, a - r) < a;
  report.tight_frac = mul_guarded(k, params.n) % a == 0;
  return report;
}

StrictnessFlags strictness_check(const FamilyParams& params, std::int64_t k) {
  params.validate();
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
  std::int64_t a = alpha(params);
  StrictnessFlags flags;
  flags.upper_strict = k > 1 && a > 1 && (params.n - 1) % a == 0;
  flags.lower_strict = k > 1 && params.p > 1 && (params.n - 1) % params.p == 0;
  return flags;
}

}  // namespace kfold
