/* C interface to the cliqueline library.
 *
 * Graphs and complexes are opaque handles released with their _free
 * function. Every fallible call returns a cl_status; on failure the message
 * is available from cl_last_error() on the calling thread until the next
 * failing call, and output pointers are left null. Strings returned through
 * char** are heap allocated and must be released with cl_string_free().
 */
#ifndef CLIQUELINE_H
#define CLIQUELINE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_INVALID_ARGUMENT = 1,
  CL_PRECONDITION = 2,
  CL_INVALID_COLLAPSE = 3,
  CL_PARSE_ERROR = 4,
  CL_CONFIG_ERROR = 5,
  CL_BUDGET_EXHAUSTED = 6,
  CL_INTERNAL = 7
} cl_status;

typedef struct cl_graph cl_graph;
typedef struct cl_complex cl_complex;

const char* cl_version(void);
const char* cl_status_name(cl_status status);
const char* cl_last_error(void);
void cl_string_free(char* s);

/* Graphs */

/* Named graphs such as "complete:5", "multipartite:3,3", "circulant:8:1,2",
 * "petersen", "cone:cycle:4". */
cl_status cl_graph_named(const char* spec, cl_graph** out);
/* edges holds 2 * edge_count vertex ids. */
cl_status cl_graph_from_edges(size_t vertex_count, const uint32_t* edges, size_t edge_count, cl_graph** out);
cl_status cl_graph_parse_edge_list(const char* text, cl_graph** out);
cl_status cl_graph_format_edge_list(const cl_graph* g, char** out);
size_t cl_graph_vertex_count(const cl_graph* g);
size_t cl_graph_edge_count(const cl_graph* g);
/* {"vertices", "edges", "triangles", "components", "chordal", "wheel_free",
 *  "triangle_free", "bipartite", "max_degree"} */
cl_status cl_graph_properties_json(const cl_graph* g, char** out);
void cl_graph_free(cl_graph* g);

/* Complexes */

cl_status cl_delta_l(const cl_graph* g, cl_complex** out);
cl_status cl_clique_complex(const cl_graph* g, cl_complex** out);
cl_status cl_complex_from_json(const char* json, cl_complex** out);
cl_status cl_complex_to_json(const cl_complex* k, char** out);
cl_status cl_complex_digest(const cl_complex* k, char** out);
/* -1 for the empty complex or a null handle. */
int64_t cl_complex_dimension(const cl_complex* k);
void cl_complex_free(cl_complex* k);

/* Homology and collapses */

/* {"betti": [...], "torsion": [[...], ...]} plus "f_vector" and
 * "euler_characteristic". */
cl_status cl_homology_json(const cl_complex* k, char** out);

/* Trace JSON {"start", "end", "steps"}; end_complex may be null. */
cl_status cl_collapse_wheelfree(const cl_graph* g, char** trace_json, cl_complex** end_complex);
cl_status cl_collapse_greedy(const cl_complex* k, char** trace_json, cl_complex** end_complex);

/* Verification suites */

cl_status cl_check_catalog(char** out);
cl_status cl_default_config(char** out);
/* Runs a suite. config_json may be null for the default configuration.
 * overrides_json may be null or an object with any of
 *   {"check": name, "seed": n, "fuzz": {"name": name, "count": n},
 *    "parts": [m, n, ...], "graph": spec}.
 * threads = 0 uses the default pool size. On success reports_json holds the
 * report array and exit_code is 0 when every check passed, 1 otherwise. A
 * configuration problem returns CL_CONFIG_ERROR with exit_code 2. */
cl_status cl_verify_run(const char* config_json, const char* overrides_json, size_t threads, char** reports_json,
                        int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
