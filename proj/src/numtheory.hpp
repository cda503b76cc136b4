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

#ifndef KFOLD_NUMTHEORY_HPP
#define KFOLD_NUMTHEORY_HPP

#include <cstdint>

namespace kfold {

// Largest k*n product the closed-form entry points accept. Inputs are
// desk-scale; a product past this is a caller bug, not a use case.
inline constexpr std::int64_t kFormulaProductLimit = std::int64_t{1} << 40;

/// Coefficients of the identity a*x + b*y == g == gcd(a, b).
struct BezoutResult {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

/// Greatest common divisor of two positive integers.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended Euclid: returns (g, x, y) with a*x + b*y == g == gcd(a, b).
BezoutResult bezout(std::int64_t a, std::int64_t b);

/// Smallest t >= 1 such that b divides a*t - gcd(a, b). Equals 1 when b
/// divides a, and lies strictly below b / gcd(a, b) otherwise.
std::int64_t t_star(std::int64_t a, std::int64_t b);

/// ceil(a / b) for a >= 0, b >= 1, in integer arithmetic.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// floor(a / b) for a >= 0, b >= 1.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// a * b, throwing std::invalid_argument on int64 overflow.
std::int64_t mul_checked(std::int64_t a, std::int64_t b);

/// a * b for the formula paths: like mul_checked but also rejects
/// products beyond kFormulaProductLimit.
std::int64_t mul_guarded(std::int64_t a, std::int64_t b);

}  // namespace kfold

#endif  // KFOLD_NUMTHEORY_HPP
