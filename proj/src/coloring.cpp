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

#include "coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "numtheory.hpp"

namespace kfold {

namespace {

void require_k(std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
}

std::vector<std::int64_t> sorted_class(std::vector<std::int64_t> seq) {
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::vector<std::int64_t> KFoldColoring::multiplicities(std::int64_t n) const {
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n), 0);
  for (const auto& cls : classes) {
    for (std::int64_t v : cls) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("malformed coloring: vertex " +
                                    std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) +
                                    ")");
      }
      ++mult[static_cast<std::size_t>(v)];
    }
  }
  return mult;
}

std::int64_t chi_k(const FamilyParams& params, std::int64_t k) {
  params.validate();
  require_k(k);
  return ceil_div(mul_guarded(k, params.n), alpha(params));
}

KFoldColoring color_web(std::int64_t n, std::int64_t p, std::int64_t k) {
  FamilyParams params{Family::Web, n, p};
  KFoldColoring out;
  out.color_count = chi_k(params, k);
  out.classes.reserve(static_cast<std::size_t>(out.color_count));
  for (std::int64_t c = 0; c < out.color_count; ++c) {
    out.classes.push_back(sorted_class(stable_seq(params, c * p)));
  }
  return out;
}

KFoldColoring color_antiweb(std::int64_t n, std::int64_t p, std::int64_t k) {
  FamilyParams params{Family::Antiweb, n, p};
  params.validate();
  require_k(k);
  std::int64_t a = alpha(params);
  std::int64_t reps = k / a;
  std::int64_t rest = k % a;  // a rest-fold coloring plus reps full rounds
  KFoldColoring out;
  out.color_count = chi_k(params, k);
  out.classes.reserve(static_cast<std::size_t>(out.color_count));
  std::int64_t rest_classes = ceil_div(mul_checked(rest, n), a);
  for (std::int64_t s = 0; s < rest_classes; ++s) {
    out.classes.push_back(sorted_class(stable_seq(params, s)));
  }
  for (std::int64_t r = 0; r < reps; ++r) {
    for (std::int64_t s = 0; s < n; ++s) {
      out.classes.push_back(sorted_class(stable_seq(params, s)));
    }
  }
  if (static_cast<std::int64_t>(out.classes.size()) != out.color_count) {
    throw std::logic_error("antiweb construction emitted " +
                           std::to_string(out.classes.size()) +
                           " classes, expected " +
                           std::to_string(out.color_count));
  }
  return out;
}

KFoldColoring color(const FamilyParams& params, std::int64_t k) {
  params.validate();
  return params.family == Family::Web ? color_web(params.n, params.p, k)
                                      : color_antiweb(params.n, params.p, k);
}

VerifyReport verify_coloring(const Graph& g, const KFoldColoring& coloring,
                             std::int64_t k) {
  require_k(k);
  std::int64_t n = g.vertex_count();
  if (static_cast<std::int64_t>(coloring.classes.size()) !=
      coloring.color_count) {
    throw std::invalid_argument(
        "malformed coloring: " + std::to_string(coloring.classes.size()) +
        " classes but color count " + std::to_string(coloring.color_count));
  }

  VerifyReport report;
  report.color_count = coloring.color_count;
  report.stability_ok = true;

  for (std::size_t c = 0; c < coloring.classes.size(); ++c) {
    const auto& cls = coloring.classes[c];
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i] < 0 || cls[i] >= n) {
        throw std::invalid_argument("malformed coloring: vertex " +
                                    std::to_string(cls[i]) +
                                    " out of range [0, " + std::to_string(n) +
                                    ")");
      }
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (cls[i] == cls[j]) {
          throw std::invalid_argument(
              "malformed coloring: vertex " + std::to_string(cls[i]) +
              " repeated in color " + std::to_string(c + 1));
        }
        if (g.adjacent(cls[i], cls[j])) {
          report.stability_ok = false;
          if (report.first_unstable_color < 0) {
            report.first_unstable_color = static_cast<std::int64_t>(c + 1);
          }
        }
      }
    }
  }

  auto mult = coloring.multiplicities(n);
  report.multiplicity_ok = true;
  report.min_multiplicity = n > 0 ? mult[0] : k;
  for (std::int64_t v = 0; v < n; ++v) {
    std::int64_t m = mult[static_cast<std::size_t>(v)];
    report.min_multiplicity = std::min(report.min_multiplicity, m);
    if (m < k && report.first_deficient_vertex < 0) {
      report.first_deficient_vertex = v;
    }
  }
  report.multiplicity_ok = report.first_deficient_vertex < 0;
  report.valid = report.multiplicity_ok && report.stability_ok;
  return report;
}

}  // namespace kfold
