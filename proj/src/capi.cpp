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

#include "kfold.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "coloring.hpp"
#include "criticality.hpp"
#include "dimacs.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"

struct kfold_graph {
  kfold::Graph graph;
};

struct kfold_coloring {
  kfold::ColoringDocument doc;
};

namespace {

thread_local std::string g_last_error;

kfold::Family to_family(kfold_family family) {
  if (family != KFOLD_WEB && family != KFOLD_ANTIWEB) {
    throw std::invalid_argument("unknown family code " +
                                std::to_string(static_cast<int>(family)));
  }
  return family == KFOLD_WEB ? kfold::Family::Web : kfold::Family::Antiweb;
}

kfold::FamilyParams to_params(kfold_family family, int64_t n, int64_t p) {
  return kfold::FamilyParams{to_family(family), n, p};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_nonnull(const void* p, const char* what) {
  if (p == nullptr) {
    throw std::invalid_argument(std::string(what) + " must not be NULL");
  }
}

template <typename Fn>
kfold_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return KFOLD_OK;
  } catch (const kfold::too_large_error& e) {
    g_last_error = e.what();
    return KFOLD_TOO_LARGE;
  } catch (const kfold::parse_error& e) {
    g_last_error = e.what();
    return KFOLD_PARSE_ERROR;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return KFOLD_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KFOLD_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return KFOLD_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* kfold_version(void) { return "1.0.0"; }

const char* kfold_status_name(kfold_status status) {
  switch (status) {
    case KFOLD_OK: return "ok";
    case KFOLD_INVALID_ARGUMENT: return "invalid argument";
    case KFOLD_TOO_LARGE: return "instance too large";
    case KFOLD_PARSE_ERROR: return "parse error";
    case KFOLD_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* kfold_last_error(void) { return g_last_error.c_str(); }

void kfold_string_free(char* s) { std::free(s); }

kfold_status kfold_gcd(int64_t a, int64_t b, int64_t* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::gcd(a, b);
  });
}

kfold_status kfold_bezout(int64_t a, int64_t b, int64_t* g, int64_t* x,
                          int64_t* y) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(x, "x");
    require_nonnull(y, "y");
    kfold::BezoutResult r = kfold::bezout(a, b);
    *g = r.g;
    *x = r.x;
    *y = r.y;
  });
}

kfold_status kfold_t_star(int64_t a, int64_t b, int64_t* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::t_star(a, b);
  });
}

kfold_status kfold_alpha(kfold_family family, int64_t n, int64_t p,
                         int64_t* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::alpha(to_params(family, n, p));
  });
}

kfold_status kfold_omega(kfold_family family, int64_t n, int64_t p,
                         int64_t* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::omega(to_params(family, n, p));
  });
}

kfold_status kfold_chi_k(kfold_family family, int64_t n, int64_t p,
                         int64_t k, int64_t* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::chi_k(to_params(family, n, p), k);
  });
}

kfold_status kfold_chi_k_minus_v(kfold_family family, int64_t n, int64_t p,
                                 int64_t k, int64_t* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::chi_k_minus_v(to_params(family, n, p), k);
  });
}

kfold_status kfold_is_web_subgraph(int64_t inner_n, int64_t inner_p,
                                   int64_t outer_n, int64_t outer_p,
                                   int* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::is_web_subgraph(inner_n, inner_p, outer_n, outer_p) ? 1 : 0;
  });
}

kfold_status kfold_stable_seq(kfold_family family, int64_t n, int64_t p,
                              int64_t i, int64_t* buffer,
                              int64_t buffer_len) {
  return wrap([&] {
    require_nonnull(buffer, "buffer");
    kfold::FamilyParams params = to_params(family, n, p);
    auto seq = kfold::stable_seq(params, i);
    if (buffer_len < static_cast<int64_t>(seq.size())) {
      throw std::invalid_argument(
          "buffer_len " + std::to_string(buffer_len) + " below sequence "
          "length " + std::to_string(seq.size()));
    }
    std::memcpy(buffer, seq.data(), seq.size() * sizeof(int64_t));
  });
}

kfold_status kfold_graph_create(kfold_family family, int64_t n, int64_t p,
                                kfold_graph** out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = new kfold_graph{kfold::materialize(to_params(family, n, p))};
  });
}

kfold_status kfold_graph_from_dimacs(const char* text, kfold_graph** out) {
  return wrap([&] {
    require_nonnull(text, "text");
    require_nonnull(out, "out");
    *out = new kfold_graph{kfold::read_dimacs(text)};
  });
}

kfold_status kfold_graph_to_dimacs(const kfold_graph* g, char** out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = copy_string(kfold::write_dimacs(g->graph));
  });
}

kfold_status kfold_graph_vertex_count(const kfold_graph* g, int64_t* out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = g->graph.vertex_count();
  });
}

kfold_status kfold_graph_edge_count(const kfold_graph* g, int64_t* out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = g->graph.edge_count();
  });
}

kfold_status kfold_graph_adjacent(const kfold_graph* g, int64_t i, int64_t j,
                                  int* out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = g->graph.adjacent(i, j) ? 1 : 0;
  });
}

kfold_status kfold_graph_delete_vertex(const kfold_graph* g, int64_t v,
                                       kfold_graph** out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = new kfold_graph{kfold::delete_vertex(g->graph, v).graph};
  });
}

kfold_status kfold_graph_lex_product(const kfold_graph* g, int64_t k,
                                     kfold_graph** out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = new kfold_graph{kfold::lex_product_with_clique(g->graph, k)};
  });
}

void kfold_graph_free(kfold_graph* g) { delete g; }

kfold_status kfold_color(kfold_family family, int64_t n, int64_t p,
                         int64_t k, kfold_coloring** out) {
  return wrap([&] {
    require_nonnull(out, "out");
    kfold::FamilyParams params = to_params(family, n, p);
    *out = new kfold_coloring{
        kfold::ColoringDocument{params, k, kfold::color(params, k)}};
  });
}

kfold_status kfold_coloring_to_json(const kfold_coloring* c, char** out) {
  return wrap([&] {
    require_nonnull(c, "c");
    require_nonnull(out, "out");
    *out = copy_string(kfold::coloring_document_to_json(c->doc));
  });
}

kfold_status kfold_coloring_from_json(const char* text,
                                      kfold_coloring** out) {
  return wrap([&] {
    require_nonnull(text, "text");
    require_nonnull(out, "out");
    *out = new kfold_coloring{kfold::coloring_document_from_json(text)};
  });
}

kfold_status kfold_coloring_color_count(const kfold_coloring* c,
                                        int64_t* out) {
  return wrap([&] {
    require_nonnull(c, "c");
    require_nonnull(out, "out");
    *out = c->doc.coloring.color_count;
  });
}

kfold_status kfold_coloring_class_size(const kfold_coloring* c,
                                       int64_t color, int64_t* out) {
  return wrap([&] {
    require_nonnull(c, "c");
    require_nonnull(out, "out");
    const auto& classes = c->doc.coloring.classes;
    if (color < 1 || color > static_cast<int64_t>(classes.size())) {
      throw std::invalid_argument("color " + std::to_string(color) +
                                  " out of range 1.." +
                                  std::to_string(classes.size()));
    }
    *out = static_cast<int64_t>(classes[static_cast<std::size_t>(color - 1)]
                                    .size());
  });
}

kfold_status kfold_coloring_class_vertex(const kfold_coloring* c,
                                         int64_t color, int64_t index,
                                         int64_t* out) {
  return wrap([&] {
    require_nonnull(c, "c");
    require_nonnull(out, "out");
    const auto& classes = c->doc.coloring.classes;
    if (color < 1 || color > static_cast<int64_t>(classes.size())) {
      throw std::invalid_argument("color " + std::to_string(color) +
                                  " out of range 1.." +
                                  std::to_string(classes.size()));
    }
    const auto& cls = classes[static_cast<std::size_t>(color - 1)];
    if (index < 0 || index >= static_cast<int64_t>(cls.size())) {
      throw std::invalid_argument("index " + std::to_string(index) +
                                  " out of range [0, " +
                                  std::to_string(cls.size()) + ")");
    }
    *out = cls[static_cast<std::size_t>(index)];
  });
}

void kfold_coloring_free(kfold_coloring* c) { delete c; }

kfold_status kfold_verify(const kfold_graph* g, const kfold_coloring* c,
                          int64_t k, int* valid, char** report_json) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(c, "c");
    require_nonnull(valid, "valid");
    kfold::VerifyReport report =
        kfold::verify_coloring(g->graph, c->doc.coloring, k);
    *valid = report.valid ? 1 : 0;
    if (report_json != nullptr) {
      *report_json = copy_string(kfold::verify_report_to_json(report));
    }
  });
}

kfold_status kfold_criticality_report(kfold_family family, int64_t n,
                                      int64_t p, int64_t k, char** json) {
  return wrap([&] {
    require_nonnull(json, "json");
    *json = copy_string(kfold::criticality_report_to_json(
        kfold::is_chik_critical(to_params(family, n, p), k)));
  });
}

kfold_status kfold_chistar_critical(kfold_family family, int64_t n,
                                    int64_t p, int* out) {
  return wrap([&] {
    require_nonnull(out, "out");
    *out = kfold::is_chistar_critical(to_params(family, n, p)).critical ? 1
                                                                        : 0;
  });
}

kfold_status kfold_bounds_report(kfold_family family, int64_t n, int64_t p,
                                 int64_t k, char** json) {
  return wrap([&] {
    require_nonnull(json, "json");
    *json = copy_string(kfold::bounds_report_to_json(
        kfold::bounds_report(to_params(family, n, p), k)));
  });
}

kfold_status kfold_strictness(kfold_family family, int64_t n, int64_t p,
                              int64_t k, int* upper_strict,
                              int* lower_strict) {
  return wrap([&] {
    require_nonnull(upper_strict, "upper_strict");
    require_nonnull(lower_strict, "lower_strict");
    kfold::StrictnessFlags flags =
        kfold::strictness_check(to_params(family, n, p), k);
    *upper_strict = flags.upper_strict ? 1 : 0;
    *lower_strict = flags.lower_strict ? 1 : 0;
  });
}

kfold_status kfold_exact_chi_k(const kfold_graph* g, int64_t k,
                               int64_t* out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = kfold::exact_chi_k(g->graph, k);
  });
}

kfold_status kfold_exact_chi_k_via_lex(const kfold_graph* g, int64_t k,
                                       int64_t* out) {
  return wrap([&] {
    require_nonnull(g, "g");
    require_nonnull(out, "out");
    *out = kfold::exact_chi_k_via_lex(g->graph, k);
  });
}

}  // extern "C"
