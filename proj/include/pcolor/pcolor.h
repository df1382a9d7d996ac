#ifndef PCOLOR_PCOLOR_H
#define PCOLOR_PCOLOR_H

/* C interface to the proper-connection library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a pc_status; on
 * failure pc_last_error() describes it (thread-local, valid until the next
 * call on the same thread). Strings handed out through char** parameters are
 * NUL-terminated, owned by the caller and released with pc_string_free.
 * Reports are JSON objects. */

#include <stddef.h>
#include <stdint.h>

#if defined(PC_BUILDING_LIBRARY)
#define PC_API __attribute__((visibility("default")))
#else
#define PC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pc_graph pc_graph;
typedef struct pc_coloring pc_coloring;

typedef enum pc_status {
  PC_OK = 0,
  PC_ERR_INVALID_ARGUMENT = 1,
  PC_ERR_IO = 2,
  PC_ERR_MALFORMED_LINE = 3,
  PC_ERR_VERTEX_OUT_OF_RANGE = 4,
  PC_ERR_SELF_LOOP = 5,
  PC_ERR_DUPLICATE_EDGE = 6,
  PC_ERR_MISSING_COLOR = 7,
  PC_ERR_COLOR_OUT_OF_RANGE = 8,
  PC_ERR_EDGE_NOT_IN_GRAPH = 9,
  PC_ERR_GRAPH_DISCONNECTED = 10,
  PC_ERR_BUDGET_EXCEEDED = 11,
  PC_ERR_COLOR_LIMIT_REACHED = 12,
  PC_ERR_SMALL_ADJACENT = 13,
  PC_ERR_SHARED_NEIGHBOR_CONFLICT = 14,
  PC_ERR_NO_PARITY_EDGE = 15,
  PC_ERR_ODD_CYCLE = 16,
  PC_ERR_INSUFFICIENT_NEIGHBORS = 17,
  PC_ERR_NO_LEAF_LINK = 18,
  PC_ERR_SUBGRAPH_DISCONNECTED = 19,
  PC_ERR_NOT_SPANNING = 20,
  PC_ERR_OUT_OF_MEMORY = 100,
  PC_ERR_INTERNAL = 101
} pc_status;

/* "Ok", or the error kind name (e.g. "GraphDisconnected"). */
PC_API const char* pc_status_name(pc_status status);
PC_API const char* pc_last_error(void);
PC_API const char* pc_version(void);
PC_API void pc_string_free(char* s);
/* Seed of child stream `index` split off `master`; the library derives all
 * of its internal seeds this way. */
PC_API uint64_t pc_derive_seed(uint64_t master, uint64_t index);

/* ---- graphs ---------------------------------------------------------- */

/* endpoints holds 2 * edge_count vertex ids: u0 v0 u1 v1 ... */
PC_API pc_status pc_graph_from_edges(size_t n, const uint32_t* endpoints,
                                     size_t edge_count, pc_graph** out);
/* G(n, p) from SplitMix64(seed). */
PC_API pc_status pc_graph_sample(size_t n, double p, uint64_t seed,
                                 pc_graph** out);
PC_API pc_status pc_graph_parse(const char* text, pc_graph** out);
PC_API pc_status pc_graph_load(const char* path, pc_graph** out);
PC_API pc_status pc_graph_format(const pc_graph* g, char** text);
/* Atomic: written to a temporary file, then renamed. */
PC_API pc_status pc_graph_save(const pc_graph* g, const char* path);
PC_API void pc_graph_free(pc_graph* g);

PC_API size_t pc_graph_vertex_count(const pc_graph* g);
PC_API size_t pc_graph_edge_count(const pc_graph* g);
/* Writes 2 * edge_count ids in edge-index (lexicographic) order. */
PC_API pc_status pc_graph_edges(const pc_graph* g, uint32_t* endpoints);
PC_API int pc_graph_is_connected(const pc_graph* g);
PC_API int pc_graph_is_2_connected(const pc_graph* g);
/* -1 when disconnected. */
PC_API int64_t pc_graph_diameter(const pc_graph* g);

/* ---- colorings ------------------------------------------------------- */

/* colors[i] colors edge i (lexicographic edge order), 1 <= colors[i] <= palette. */
PC_API pc_status pc_coloring_from_colors(const pc_graph* g,
                                         const uint32_t* colors,
                                         uint32_t palette, pc_coloring** out);
PC_API pc_status pc_coloring_parse(const pc_graph* g, const char* text,
                                   pc_coloring** out);
PC_API pc_status pc_coloring_load(const pc_graph* g, const char* path,
                                  pc_coloring** out);
PC_API pc_status pc_coloring_format(const pc_graph* g, const pc_coloring* c,
                                    char** text);
PC_API pc_status pc_coloring_save(const pc_graph* g, const pc_coloring* c,
                                  const char* path);
PC_API void pc_coloring_free(pc_coloring* c);

PC_API uint32_t pc_coloring_palette(const pc_coloring* c);
PC_API size_t pc_coloring_size(const pc_coloring* c);
/* 0 when edge is out of range. */
PC_API uint32_t pc_coloring_color(const pc_coloring* c, size_t edge);

/* ---- proper paths ----------------------------------------------------- */

typedef struct pc_verify_options {
  int early_exit;       /* stop at the first failing pair */
  int certificates;     /* include a proper path per checked pair */
  unsigned threads;     /* used only without early exit */
  const uint32_t* pairs; /* optional: 2 * pair_count vertex ids to check */
  size_t pair_count;
} pc_verify_options;

PC_API void pc_verify_options_default(pc_verify_options* options);

/* Report: {properly_connected, palette, pairs_checked, failing_pairs,
 * certificates?}. options may be NULL. */
PC_API pc_status pc_verify(const pc_graph* g, const pc_coloring* c,
                           const pc_verify_options* options, char** json);

/* Proper u-v path. path must hold n entries; *length is 0 when none exists. */
PC_API pc_status pc_proper_path(const pc_graph* g, const pc_coloring* c,
                                uint32_t u, uint32_t v, uint32_t* path,
                                size_t* length);

/* ---- exact proper connection number ----------------------------------- */

typedef struct pc_solve_options {
  uint32_t max_colors;           /* 0: no cap */
  size_t max_edges_two_colors;   /* exhaustive-search limits */
  size_t max_edges_more_colors;
} pc_solve_options;

PC_API void pc_solve_options_default(pc_solve_options* options);

/* Report: {pc, lower_bound, upper_bound, witness_palette}. witness may be
 * NULL; options may be NULL. */
PC_API pc_status pc_solve(const pc_graph* g, const pc_solve_options* options,
                          pc_coloring** witness, char** json);

PC_API pc_status pc_chromatic_index(const pc_graph* g, uint32_t* out);

/* ---- two-coloring construction ---------------------------------------- */

typedef struct pc_construct_options {
  int paper_constants; /* tau = beta ln n without the desk-scale floor */
  double beta;
  double min_tau;
  double epsilon;
  uint32_t arity;      /* 0: derived from n */
  uint32_t depth;      /* 0: derived from n */
  uint32_t repair_rounds;
} pc_construct_options;

PC_API void pc_construct_options_default(pc_construct_options* options);

/* Runs the construction. A construction that fails at some stage still
 * returns PC_OK: *coloring is set to NULL and the trace says why. */
PC_API pc_status pc_construct(const pc_graph* g,
                              const pc_construct_options* options,
                              uint64_t seed, pc_coloring** coloring,
                              char** trace_json);

/* Structural checks on a sample of G(n, p). tau <= 0 uses beta * ln n. */
PC_API pc_status pc_diagnose(const pc_graph* g, double p, double beta,
                             double tau, uint64_t seed, char** json);

/* ---- two spanning subgraphs ------------------------------------------- */

/* e1, e2 hold 2 * count vertex ids. Report: {t, palette, verified, root}. */
PC_API pc_status pc_two_subgraphs(const pc_graph* g, const uint32_t* e1,
                                  size_t e1_count, const uint32_t* e2,
                                  size_t e2_count, uint32_t root,
                                  pc_coloring** coloring, char** json);

/* Two edge-disjoint spanning trees as spanning subgraphs of g; both outputs
 * are NULL (with PC_OK) when none exist. */
PC_API pc_status pc_spanning_tree_pair(const pc_graph* g, pc_graph** first,
                                       pc_graph** second);

/* ---- experiments ------------------------------------------------------ */

typedef enum pc_formula {
  PC_FORMULA_CONNECT = 0,  /* p = (ln n + a) / n */
  PC_FORMULA_HAMILTON = 1  /* p = (ln n + ln ln n + a) / n */
} pc_formula;

typedef struct pc_experiment_options {
  size_t n;
  pc_formula formula;
  const double* offsets;
  size_t offset_count;
  size_t trials;
  uint64_t seed;
  unsigned threads;
  int construct;
  int paper_constants;
} pc_experiment_options;

/* csv and json may each be NULL if not wanted. */
PC_API pc_status pc_experiment(const pc_experiment_options* options,
                               char** csv, char** json);

/* Report: {n, labeled_graphs, connected_graphs, histogram, pc2_fraction}. */
PC_API pc_status pc_census(size_t n, char** json);

#ifdef __cplusplus
}
#endif

#endif /* PCOLOR_PCOLOR_H */
