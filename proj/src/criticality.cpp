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

#include <stdexcept>

#include "coloring.hpp"
#include "numtheory.hpp"

namespace kfold {

namespace {

void require_k(std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
}

// Web: is there a decomposition k = a*t + b*p with a >= 1, b >= 0?
bool web_decomposition(std::int64_t k, std::int64_t t, std::int64_t p,
                       std::int64_t* a_out, std::int64_t* b_out) {
  for (std::int64_t a = 1; a * t <= k; ++a) {
    std::int64_t rest = k - a * t;
    if (rest % p == 0) {
      *a_out = a;
      *b_out = rest / p;
      return true;
    }
  }
  return false;
}

// Antiweb: k = a*t + b*q with a >= 1 and b*q >= a*(g - t). The second
// constraint gives k >= a*g, which bounds the search; b may be negative
// when t > g.
bool antiweb_decomposition(std::int64_t k, std::int64_t t, std::int64_t q,
                           std::int64_t g, std::int64_t* a_out,
                           std::int64_t* b_out) {
  for (std::int64_t a = 1; a * g <= k; ++a) {
    std::int64_t rest = k - a * t;
    if (rest % q != 0) {
      continue;
    }
    std::int64_t b = rest / q;
    if (b * q >= a * (g - t)) {
      *a_out = a;
      *b_out = b;
      return true;
    }
  }
  return false;
}

}  // namespace

std::int64_t chi_k_web_minus_v(std::int64_t n, std::int64_t p,
                               std::int64_t k) {
  FamilyParams params{Family::Web, n, p};
  params.validate();
  require_k(k);
  std::int64_t kn = mul_guarded(k, n);
  if (gcd(n, p) != 1) {
    return ceil_div(kn, p);
  }
  return ceil_div(kn - floor_div(k, t_star(n, p)), p);
}

std::int64_t chi_k_antiweb_minus_v(std::int64_t n, std::int64_t p,
                                   std::int64_t k) {
  FamilyParams params{Family::Antiweb, n, p};
  params.validate();
  require_k(k);
  std::int64_t a = alpha(params);
  if (n % p == 0) {
    return ceil_div(mul_guarded(k, n), a);
  }
  return ceil_div(mul_guarded(k, n - 1), a);
}

std::int64_t chi_k_minus_v(const FamilyParams& params, std::int64_t k) {
  params.validate();
  return params.family == Family::Web
             ? chi_k_web_minus_v(params.n, params.p, k)
             : chi_k_antiweb_minus_v(params.n, params.p, k);
}

std::string CriticalityReport::witness_text() const {
  bool web = params.family == Family::Web;
  switch (witness) {
    case CritWitness::GcdBranch:
      return web ? "gcd(n,p)≠1" : "gcd(n,p)=p";
    case CritWitness::ThresholdBranch:
      return web ? "k >= p*t_star" : "k >= alpha";
    case CritWitness::Decomposition:
      return (web ? "k = a*t_star + b*p (a=" : "k = a*t_star + b*q (a=") +
             std::to_string(witness_a) + ", b=" + std::to_string(witness_b) +
             ")";
    case CritWitness::NoDecomposition:
      return web ? "no decomposition k = a*t_star + b*p"
                 : "no decomposition k = a*t_star + b*q";
  }
  return "?";
}

CriticalityReport is_chik_critical(const FamilyParams& params,
                                   std::int64_t k) {
  params.validate();
  require_k(k);

  CriticalityReport report;
  report.params = params;
  report.k = k;
  report.chi_k = kfold::chi_k(params, k);
  report.chi_k_minus_v = chi_k_minus_v(params, k);
  report.gap_bounds = criticality_gap_bounds(params, k);

  std::int64_t n = params.n;
  std::int64_t p = params.p;
  bool by_condition = false;

  if (params.family == Family::Web) {
    if (gcd(n, p) != 1) {
      report.witness = CritWitness::GcdBranch;
    } else {
      std::int64_t t = t_star(n, p);
      if (k >= mul_checked(p, t)) {
        by_condition = true;
        report.witness = CritWitness::ThresholdBranch;
      } else if (web_decomposition(k, t, p, &report.witness_a,
                                   &report.witness_b)) {
        by_condition = true;
        report.witness = CritWitness::Decomposition;
      } else {
        report.witness = CritWitness::NoDecomposition;
      }
    }
  } else {
    if (n % p == 0) {
      report.witness = CritWitness::GcdBranch;
    } else {
      std::int64_t a = alpha(params);
      std::int64_t g = gcd(n, a);
      std::int64_t q = a / g;
      std::int64_t t = t_star(n, a);
      if (k >= a) {
        by_condition = true;
        report.witness = CritWitness::ThresholdBranch;
      } else if (antiweb_decomposition(k, t, q, g, &report.witness_a,
                                       &report.witness_b)) {
        by_condition = true;
        report.witness = CritWitness::Decomposition;
      } else {
        report.witness = CritWitness::NoDecomposition;
      }
    }
  }

  bool by_formula = report.chi_k_minus_v < report.chi_k;
  if (by_condition != by_formula) {
    throw std::logic_error(
        "criticality derivations disagree for " +
        std::string(family_name(params.family)) + " n=" + std::to_string(n) +
        " p=" + std::to_string(p) + " k=" + std::to_string(k));
  }
  report.critical = by_formula;
  return report;
}

ChiStarReport is_chistar_critical(const FamilyParams& params) {
  params.validate();
  std::int64_t a = alpha(params);
  ChiStarReport report;
  report.critical = (params.n - 1) % a == 0;
  report.witness = report.critical ? "alpha divides n-1"
                                   : "alpha does not divide n-1";
  return report;
}

GapBounds criticality_gap_bounds(const FamilyParams& params, std::int64_t k) {
  params.validate();
  require_k(k);
  if (params.family == Family::Web) {
    if (gcd(params.n, params.p) != 1) {
      return GapBounds{0, 0};
    }
    std::int64_t pt = mul_checked(params.p, t_star(params.n, params.p));
    return GapBounds{floor_div(k, pt), ceil_div(k, pt)};
  }
  if (params.n % params.p == 0) {
    return GapBounds{0, 0};
  }
  std::int64_t a = alpha(params);
  return GapBounds{floor_div(k, a), ceil_div(k, a)};
}

}  // namespace kfold
