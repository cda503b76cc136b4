/*
 * Copyright 2026 The kfold Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of libkfold: optimal k-fold colorings of webs and antiwebs.
 *
 * A web on n vertices (parameter p) joins vertices whose circular index
 * distance lies in [p, n-p]; an antiweb is its complement. The library
 * computes k-th chromatic numbers in closed form, builds optimal k-fold
 * colorings, decides criticality, classifies bound tightness, and checks
 * everything against an exact search on small instances.
 *
 * Conventions:
 *  - every function returns a kfold_status; results go to out-pointers
 *  - handles (kfold_graph, kfold_coloring) are opaque; free them with
 *    the matching *_free function
 *  - strings returned through char** are heap-allocated; release them
 *    with kfold_string_free
 *  - kfold_last_error() describes the most recent failure in the
 *    calling thread
 */

#ifndef KFOLD_H
#define KFOLD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kfold_status {
  KFOLD_OK = 0,
  KFOLD_INVALID_ARGUMENT = 1, /* parameter validation failed */
  KFOLD_TOO_LARGE = 2,        /* exact-search size cap exceeded */
  KFOLD_PARSE_ERROR = 3,      /* malformed DIMACS or JSON input */
  KFOLD_INTERNAL_ERROR = 4
} kfold_status;

typedef enum kfold_family {
  KFOLD_WEB = 0,
  KFOLD_ANTIWEB = 1
} kfold_family;

typedef struct kfold_graph kfold_graph;
typedef struct kfold_coloring kfold_coloring;

const char* kfold_version(void);
const char* kfold_status_name(kfold_status status);

/* Message for the most recent error in this thread; never NULL. */
const char* kfold_last_error(void);

void kfold_string_free(char* s);

/* ---- integer primitives ---- */

kfold_status kfold_gcd(int64_t a, int64_t b, int64_t* out);

/* Coefficients with a*x + b*y == gcd(a, b). */
kfold_status kfold_bezout(int64_t a, int64_t b, int64_t* g, int64_t* x,
                          int64_t* y);

/* Least t >= 1 with b dividing a*t - gcd(a, b). */
kfold_status kfold_t_star(int64_t a, int64_t b, int64_t* out);

/* ---- closed forms (valid params: p >= 1, n >= 2p) ---- */

kfold_status kfold_alpha(kfold_family family, int64_t n, int64_t p,
                         int64_t* out);
kfold_status kfold_omega(kfold_family family, int64_t n, int64_t p,
                         int64_t* out);

/* k-th chromatic number, ceil(k*n/alpha). */
kfold_status kfold_chi_k(kfold_family family, int64_t n, int64_t p,
                         int64_t k, int64_t* out);

/* k-th chromatic number after deleting any one vertex. */
kfold_status kfold_chi_k_minus_v(kfold_family family, int64_t n, int64_t p,
                                 int64_t k, int64_t* out);

/* Trotter's subgraph condition between two webs. */
kfold_status kfold_is_web_subgraph(int64_t inner_n, int64_t inner_p,
                                   int64_t outer_n, int64_t outer_p,
                                   int* out);

/* The i-th maximum-stable-set rotation. `buffer` must hold alpha
 * entries; `buffer_len` is checked against it. */
kfold_status kfold_stable_seq(kfold_family family, int64_t n, int64_t p,
                              int64_t i, int64_t* buffer,
                              int64_t buffer_len);

/* ---- graphs ---- */

kfold_status kfold_graph_create(kfold_family family, int64_t n, int64_t p,
                                kfold_graph** out);
kfold_status kfold_graph_from_dimacs(const char* text, kfold_graph** out);
kfold_status kfold_graph_to_dimacs(const kfold_graph* g, char** out);
kfold_status kfold_graph_vertex_count(const kfold_graph* g, int64_t* out);
kfold_status kfold_graph_edge_count(const kfold_graph* g, int64_t* out);
kfold_status kfold_graph_adjacent(const kfold_graph* g, int64_t i, int64_t j,
                                  int* out);
kfold_status kfold_graph_delete_vertex(const kfold_graph* g, int64_t v,
                                       kfold_graph** out);
kfold_status kfold_graph_lex_product(const kfold_graph* g, int64_t k,
                                     kfold_graph** out);
void kfold_graph_free(kfold_graph* g);

/* ---- colorings ---- */

/* Optimal k-fold coloring of the family graph. */
kfold_status kfold_color(kfold_family family, int64_t n, int64_t p,
                         int64_t k, kfold_coloring** out);

/* JSON document: {"family","n","p","k","x","classes"}; round trips are
 * lossless. */
kfold_status kfold_coloring_to_json(const kfold_coloring* c, char** out);
kfold_status kfold_coloring_from_json(const char* text,
                                      kfold_coloring** out);

kfold_status kfold_coloring_color_count(const kfold_coloring* c,
                                        int64_t* out);
kfold_status kfold_coloring_class_size(const kfold_coloring* c,
                                       int64_t color, int64_t* out);
/* The index-th vertex (sorted order) of the 1-based color class. */
kfold_status kfold_coloring_class_vertex(const kfold_coloring* c,
                                         int64_t color, int64_t index,
                                         int64_t* out);
void kfold_coloring_free(kfold_coloring* c);

/* Checks the coloring against the graph; `valid` gets 0/1 and, when
 * `report_json` is non-NULL, a detailed verdict document. */
kfold_status kfold_verify(const kfold_graph* g, const kfold_coloring* c,
                          int64_t k, int* valid, char** report_json);

/* ---- criticality and bounds ---- */

/* JSON report {"family","n","p","k","chi_k","chi_k_minus_v","critical",
 * "witness","gap_bounds"}. */
kfold_status kfold_criticality_report(kfold_family family, int64_t n,
                                      int64_t p, int64_t k, char** json);

/* 1 iff the graph is chi_k-critical for every k >= 1 (alpha | n-1). */
kfold_status kfold_chistar_critical(kfold_family family, int64_t n,
                                    int64_t p, int* out);

/* JSON report {"k_omega","chi_k","k_chi","frac_chi","lex_lower",
 * "tight"}. */
kfold_status kfold_bounds_report(kfold_family family, int64_t n, int64_t p,
                                 int64_t k, char** json);

kfold_status kfold_strictness(kfold_family family, int64_t n, int64_t p,
                              int64_t k, int* upper_strict,
                              int* lower_strict);

/* ---- exact search (small instances; see KFOLD_ORACLE_LIMIT) ---- */

kfold_status kfold_exact_chi_k(const kfold_graph* g, int64_t k,
                               int64_t* out);
kfold_status kfold_exact_chi_k_via_lex(const kfold_graph* g, int64_t k,
                                       int64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* KFOLD_H */
