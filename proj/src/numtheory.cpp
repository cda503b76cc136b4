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

#include "numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kfold {

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " +
                                std::to_string(v));
  }
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return std::gcd(a, b);
}

BezoutResult bezout(std::int64_t a, std::int64_t b) {
  require_positive(a, "a");
  require_positive(b, "b");
  // Iterative extended Euclid on (r, x, y) triples.
  std::int64_t r0 = a, x0 = 1, y0 = 0;
  std::int64_t r1 = b, x1 = 0, y1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t x2 = x0 - q * x1;
    std::int64_t y2 = y0 - q * y1;
    r0 = r1; x0 = x1; y0 = y1;
    r1 = r2; x1 = x2; y1 = y2;
  }
  return BezoutResult{r0, x0, y0};
}

std::int64_t t_star(std::int64_t a, std::int64_t b) {
  std::int64_t g = gcd(a, b);
  if (g == b) {
    return 1;
  }
  // Exhaustive search; 0 < t < b/g is guaranteed, so the loop terminates.
  std::int64_t bound = b / g;
  for (std::int64_t t = 1; t < bound; ++t) {
    if ((mul_checked(a, t) - g) % b == 0) {
      return t;
    }
  }
  throw std::logic_error("t_star: no witness below b/gcd(a,b)");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw std::invalid_argument("ceil_div requires a >= 0, got " +
                                std::to_string(a));
  }
  require_positive(b, "b");
  return (a + b - 1) / b;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw std::invalid_argument("floor_div requires a >= 0, got " +
                                std::to_string(a));
  }
  require_positive(b, "b");
  return a / b;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::invalid_argument("integer overflow in " + std::to_string(a) +
                                " * " + std::to_string(b));
  }
  return out;
}

std::int64_t mul_guarded(std::int64_t a, std::int64_t b) {
  std::int64_t out = mul_checked(a, b);
  if (out > kFormulaProductLimit) {
    throw std::invalid_argument(
        "product " + std::to_string(a) + " * " + std::to_string(b) +
        " exceeds the supported range (2^40)");
  }
  return out;
}

}  // namespace kfold
