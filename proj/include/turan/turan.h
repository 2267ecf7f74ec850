// Copyright 2026 The turanbench Authors.
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

// C interface to the turan library. All objects are opaque handles owned by
// the caller and released with the matching *_destroy function. Every
// function returns a status code; on failure turan_last_error() describes
// the problem for the calling thread. Strings returned through char** are
// heap-allocated JSON or text and must be released with turan_string_free.

#ifndef TURAN_TURAN_H_
#define TURAN_TURAN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TURAN_API __declspec(dllexport)
#else
#define TURAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum turan_status {
  TURAN_OK = 0,
  TURAN_ERR_INPUT = 1,     /* precondition violated */
  TURAN_ERR_PARSE = 2,     /* malformed .h3 / .cmg / JSON text */
  TURAN_ERR_RESOURCE = 3,  /* node budget exhausted or out of memory */
  TURAN_ERR_OVERFLOW = 4,  /* a count does not fit in 64 bits */
  TURAN_ERR_NULL = 5,      /* a required pointer argument was NULL */
  TURAN_ERR_INTERNAL = 6
} turan_status;

typedef struct turan_hypergraph turan_hypergraph;
typedef struct turan_multigraph turan_multigraph;

/* Marks an infinite p or q value. */
#define TURAN_INFINITE (-1)

TURAN_API const char* turan_last_error(void);
TURAN_API const char* turan_status_name(turan_status status);
TURAN_API const char* turan_version(void);
TURAN_API void turan_string_free(char* s);

/* Node budget from TURAN_BUDGET, or fallback when unset. */
TURAN_API turan_status turan_default_budget(uint64_t fallback, uint64_t* out);

/* ---- hypergraphs ---- */

/* triples holds 3*m vertex labels; each triple may be in any order. */
TURAN_API turan_status turan_hypergraph_create(uint32_t n, const uint32_t* triples,
                                               size_t m, turan_hypergraph** out);
TURAN_API turan_status turan_hypergraph_read(const char* path, turan_hypergraph** out);
TURAN_API turan_status turan_hypergraph_parse(const char* text, turan_hypergraph** out);
TURAN_API turan_status turan_hypergraph_write(const turan_hypergraph* h, const char* path);
TURAN_API turan_status turan_hypergraph_format(const turan_hypergraph* h, char** text);
TURAN_API void turan_hypergraph_destroy(turan_hypergraph* h);

TURAN_API turan_status turan_hypergraph_vertex_count(const turan_hypergraph* h, uint32_t* out);
TURAN_API turan_status turan_hypergraph_edge_count(const turan_hypergraph* h, size_t* out);
/* Copies up to capacity triples (3*capacity labels) and reports the total. */
TURAN_API turan_status turan_hypergraph_edges(const turan_hypergraph* h, uint32_t* buffer,
                                              size_t capacity, size_t* total);

/* ---- invariants ---- */

TURAN_API turan_status turan_matching_number(const turan_hypergraph* h, size_t* out);
TURAN_API turan_status turan_has_matching(const turan_hypergraph* h, size_t k, int* out);
TURAN_API turan_status turan_max_codegree(const turan_hypergraph* h, size_t* out);
TURAN_API turan_status turan_weak_chromatic_number(const turan_hypergraph* h, size_t* out);
/* Red counts; TURAN_INFINITE when no colouring exists. */
TURAN_API turan_status turan_p_value(const turan_hypergraph* h, int64_t* out);
TURAN_API turan_status turan_q_value(const turan_hypergraph* h, int64_t* out);
/* JSON: per-vertex link edges and chromatic numbers plus the ordering. */
TURAN_API turan_status turan_links_json(const turan_hypergraph* h, char** json);
/* JSON: high/low parts of the degree split at 3sn+1 with their sizes. */
TURAN_API turan_status turan_degree_partition_json(const turan_hypergraph* h, int64_t s,
                                                   char** json);

/* embedding, if not NULL, receives one host label per pattern vertex. */
TURAN_API turan_status turan_contains(const turan_hypergraph* pattern,
                                      const turan_hypergraph* host, int* found,
                                      uint32_t* embedding);

/* ---- constructions ---- */

/* params_json is an object of integer parameters, e.g. {"n":20,"s":2}.
   pattern is required by "h-conjecture" and may be NULL otherwise. info
   receives name, params, part_labels and claimed_edges as JSON. */
TURAN_API turan_status turan_construct(const char* name, const char* params_json,
                                       const turan_hypergraph* pattern,
                                       turan_hypergraph** out, char** info);
TURAN_API turan_status turan_catalog_json(char** json);

/* ---- exact searches ---- */

/* matching_bound < 0 means no matching constraint. witness may be NULL.
   With enumerate set (n <= 6) the result JSON also lists one edge list per
   isomorphism class. */
TURAN_API turan_status turan_search_extremal(uint32_t n, int64_t matching_bound,
                                             const turan_hypergraph* const* family,
                                             size_t family_size, uint64_t budget,
                                             int enumerate, turan_hypergraph** witness,
                                             char** result);

/* ---- coloured multigraphs ---- */

TURAN_API turan_status turan_multigraph_read(const char* path, turan_multigraph** out);
TURAN_API turan_status turan_multigraph_parse(const char* text, turan_multigraph** out);
TURAN_API void turan_multigraph_destroy(turan_multigraph* m);
TURAN_API turan_status turan_multigraph_layer_count(const turan_multigraph* m, size_t* out);

/* Star (bipartite = 0) or bipartite (bipartite = 1) classes. witness JSON
   is set only when found. */
TURAN_API turan_status turan_colored_clique(const turan_multigraph* m, size_t k, size_t t,
                                            int exact_k, int bipartite, int* found,
                                            char** witness);
TURAN_API turan_status turan_colored_max(uint32_t n, size_t s, size_t r, int exact_k,
                                         uint64_t budget, char** result);
/* JSON with the three closed-form bounds and their range flags. */
TURAN_API turan_status turan_colored_bounds(int64_t n, int64_t s, int64_t r, char** json);

/* ---- formulas and the verification suite ---- */

TURAN_API turan_status turan_formulas_json(int64_t n, int64_t s, int64_t r, char** json);
/* criteria may be NULL (all); exit_code follows the CLI convention. */
TURAN_API turan_status turan_verify_paper(const char* scale, const int* criteria,
                                          size_t criteria_count, char** report,
                                          int* exit_code);

#ifdef __cplusplus
}
#endif

#endif  // TURAN_TURAN_H_
