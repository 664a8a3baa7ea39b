#ifndef SCLQ_SCLQ_H
#define SCLQ_SCLQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(SCLQ_BUILDING_LIBRARY)
#define SCLQ_API __attribute__((visibility("default")))
#else
#define SCLQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sclq_graph sclq_graph;
typedef struct sclq_graph_list sclq_graph_list;
typedef struct sclq_enumerator sclq_enumerator;

typedef enum sclq_status {
  SCLQ_OK = 0,
  SCLQ_ERR_INVALID_ARGUMENT = 1,
  SCLQ_ERR_PARSE = 2,
  SCLQ_ERR_DOMAIN = 3,
  SCLQ_ERR_TOO_LARGE = 4,
  SCLQ_ERR_PRECONDITION = 5,
  SCLQ_ERR_IO = 6,
  SCLQ_ERR_INTERNAL = 7
} sclq_status;

typedef enum sclq_format { SCLQ_FORMAT_GRAPH6 = 0, SCLQ_FORMAT_EDGE_LIST = 1 } sclq_format;

SCLQ_API const char* sclq_version(void);
SCLQ_API const char* sclq_status_name(sclq_status status);

/* Message of the last failed call on this thread; "" when none. */
SCLQ_API const char* sclq_last_error(void);

/* Strings and arrays returned through out-parameters are owned by the caller. */
SCLQ_API void sclq_string_free(char* s);
SCLQ_API void sclq_u32_free(uint32_t* values);

/* Graphs. Edge ids follow the order of `pairs` (2 * edge_count values). */
SCLQ_API sclq_status sclq_graph_create(size_t vertex_count, const uint32_t* pairs, size_t edge_count,
                                       sclq_graph** out);
SCLQ_API sclq_status sclq_graph_from_graph6(const char* line, sclq_graph** out);
SCLQ_API sclq_status sclq_graph_clone(const sclq_graph* g, sclq_graph** out);
SCLQ_API void sclq_graph_free(sclq_graph* g);
SCLQ_API size_t sclq_graph_vertex_count(const sclq_graph* g);
SCLQ_API size_t sclq_graph_edge_count(const sclq_graph* g);
SCLQ_API size_t sclq_graph_max_degree(const sclq_graph* g);
SCLQ_API sclq_status sclq_graph_edge(const sclq_graph* g, uint32_t edge, uint32_t* u, uint32_t* v);
SCLQ_API sclq_status sclq_graph_to_graph6(const sclq_graph* g, char** out);
SCLQ_API sclq_status sclq_graph_to_edge_list(const sclq_graph* g, char** out);

/* Reading many graphs; parse errors name the offending line. */
SCLQ_API sclq_status sclq_read_graphs(const char* text, size_t length, sclq_format format,
                                      sclq_graph_list** out);
SCLQ_API sclq_status sclq_read_graphs_file(const char* path, sclq_format format, sclq_graph_list** out);
SCLQ_API size_t sclq_graph_list_size(const sclq_graph_list* list);
/* Borrowed; valid until the list is freed. */
SCLQ_API const sclq_graph* sclq_graph_list_get(const sclq_graph_list* list, size_t index);
SCLQ_API void sclq_graph_list_free(sclq_graph_list* list);

/* Strong clique number with a maximum strong clique as ascending edge ids. */
SCLQ_API sclq_status sclq_strong_clique(const sclq_graph* g, size_t* size, uint32_t** witness,
                                        size_t* witness_length);
SCLQ_API sclq_status sclq_is_strong_clique(const sclq_graph* g, const uint32_t* edges, size_t count,
                                           int* result);

/* Line-graph distance; *infinite is 1 across components (then *distance is 0). */
SCLQ_API sclq_status sclq_edge_distance(const sclq_graph* g, uint32_t e, uint32_t f, uint32_t* distance,
                                        int* infinite);

/* Cycle subgraph on exactly `length` vertices; *found is 0 when none exists. */
SCLQ_API sclq_status sclq_find_cycle(const sclq_graph* g, size_t length, int* found, uint32_t** vertices,
                                     size_t* vertex_count);

/* Exact vertex cover number and maximum matching size. */
SCLQ_API sclq_status sclq_vertex_cover_number(const sclq_graph* g, size_t* tau);
SCLQ_API sclq_status sclq_matching_number(const sclq_graph* g, size_t* size);

/* Generator from a JSON spec: {"family": "c5_blowup", "t": 2} or with
   "params", "seed" and "probability" members. */
SCLQ_API sclq_status sclq_generate(const char* spec_json, sclq_graph** out);
SCLQ_API const char* sclq_generator_families(void);

/* Exhaustive labeled graphs on n vertices; dedup keeps one per isomorphism
   class. *out is NULL once exhausted. */
SCLQ_API sclq_status sclq_enumerator_create(int n, int dedup, sclq_enumerator** out);
SCLQ_API sclq_status sclq_enumerator_next(sclq_enumerator* en, sclq_graph** out);
SCLQ_API void sclq_enumerator_free(sclq_enumerator* en);

/* JSON reports. */
SCLQ_API sclq_status sclq_sc_json(const sclq_graph* g, char** out);
SCLQ_API sclq_status sclq_free_json(const sclq_graph* g, const size_t* lengths, size_t count, char** out);

/* One graph against one bound spec (e.g. "THM19"); k < 0 means absent. */
SCLQ_API sclq_status sclq_verify_json(const sclq_graph* g, const char* spec, int k, char** out);

/* Batch job document in, batch report out; *counterexamples receives the
   number of counterexample reports. */
SCLQ_API sclq_status sclq_batch_verify_json(const char* job_json, char** out, size_t* counterexamples);

/* Witness operations: "lemma21-path", "lemma21-cycle", "s-minimal",
   "xm-path", "special", "eq-audit". Arguments as a JSON object:
   {"matching": [edge ids], "s": [edge ids], "x": vertex, "length": l}.
   Without "matching" (or "s"), a maximum matching of G[maximum strong clique]
   (or the clique itself) is used. */
SCLQ_API sclq_status sclq_witness_json(const sclq_graph* g, const char* op, const char* args_json,
                                       char** out);

#ifdef __cplusplus
}
#endif

#endif
