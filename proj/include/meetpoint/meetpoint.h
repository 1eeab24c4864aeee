/*
 * meetpoint C API.
 *
 * Picks a meeting vertex for a group of users on a weighted graph by running
 * one Dijkstra search per user (a partial adjacent matrix: one row per user,
 * one column per vertex), then minimising a blend of total travel cost and
 * travel-cost disparity. Also simulates the re-planning loop in which every
 * user takes one step per tick and the destination is recomputed.
 *
 * Every fallible call returns an mp_status; on failure a description is
 * available from mp_last_error_message() on the same thread. Handles are
 * opaque and owned by the caller once returned; free them with the matching
 * *_free function. Strings returned through char** are freed with
 * mp_string_free. Unreachable distances and scores cross the boundary as
 * IEEE +infinity.
 */
#ifndef MEETPOINT_MEETPOINT_H_
#define MEETPOINT_MEETPOINT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MEETPOINT_BUILD
#    define MEETPOINT_API __declspec(dllexport)
#  else
#    define MEETPOINT_API __declspec(dllimport)
#  endif
#else
#  define MEETPOINT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_INVALID_ARGUMENT,
  MP_ERR_INVALID_EDGE_ENDPOINT,
  MP_ERR_NEGATIVE_WEIGHT,
  MP_ERR_EMPTY_CHANNEL_LIST,
  MP_ERR_UNKNOWN_CHANNEL,
  MP_ERR_INVALID_SOURCE,
  MP_ERR_EMPTY_SOURCES,
  MP_ERR_UNKNOWN_CHARACTER,
  MP_ERR_NO_USERS,
  MP_ERR_EMPTY_MAP,
  MP_ERR_EMPTY_MATRIX,
  MP_ERR_ZERO_SUM,
  MP_ERR_NON_FINITE_ENTRY,
  MP_ERR_ALL_ZERO_SCORES,
  MP_ERR_SHAPE_MISMATCH,
  MP_ERR_LENGTH_MISMATCH,
  MP_ERR_NO_MUTUALLY_REACHABLE_VERTEX,
  MP_ERR_NO_CANDIDATE,
  MP_ERR_UNREACHABLE_DESTINATION,
  MP_ERR_MAX_TICKS_EXCEEDED,
  MP_ERR_TIMEOUT,
  MP_ERR_PARSE,
  MP_ERR_IO,
  MP_ERR_INCONSISTENT_TRACE,
  MP_ERR_INTERNAL
} mp_status;

typedef enum mp_score_kind {
  MP_SCORE_TOTAL = 0,      /* sum of user distances per vertex */
  MP_SCORE_SIMILARITY = 1, /* sum of pairwise distance gaps per vertex */
  MP_SCORE_COMBINED = 2    /* weighted blend; the destination minimises it */
} mp_score_kind;

typedef struct mp_instance mp_instance; /* graph + users (+ grid, scores) */
typedef struct mp_solution mp_solution;
typedef struct mp_trace mp_trace;

typedef struct mp_options {
  double alpha;       /* weight of the total-travel term */
  double beta;        /* weight of the equal-travel term; alpha + beta = 1 */
  size_t parallelism; /* worker threads for per-user searches */
} mp_options;

/* alpha = beta = 0.5, parallelism = 1. */
MEETPOINT_API void mp_options_init(mp_options* options);

MEETPOINT_API const char* mp_status_name(mp_status status);
MEETPOINT_API const char* mp_last_error_message(void);
MEETPOINT_API void mp_string_free(char* s);

/* ---- instances --------------------------------------------------------- */

/* Grid map text: '#' wall, ' ' free, 'U' user start. channels may be NULL
 * (distance only); extra channels copy the unit distance weight. */
MEETPOINT_API mp_status mp_instance_from_grid_text(const char* text,
                                                   const char* const* channels,
                                                   size_t channel_count,
                                                   mp_instance** out);

/* Graph file text (v / undirected / e / u records). */
MEETPOINT_API mp_status mp_instance_from_graph_text(const char* text,
                                                    mp_instance** out);

/* weights is edge-major: channel_count values per edge. */
MEETPOINT_API mp_status mp_instance_from_edges(
    size_t vertex_count, const char* const* channels, size_t channel_count,
    const uint32_t* from, const uint32_t* to, const double* weights,
    size_t edge_count, int undirected, const uint32_t* users,
    size_t user_count, mp_instance** out);

/* Bordered width x height grid with random interior walls, pruned to one
 * component, users on distinct random free cells. */
MEETPOINT_API mp_status mp_instance_generate_grid(size_t width, size_t height,
                                                  double wall_density,
                                                  size_t user_count,
                                                  uint64_t seed,
                                                  mp_instance** out);

/* Copy of `instance` with a new user list (scores are dropped). */
MEETPOINT_API mp_status mp_instance_with_users(const mp_instance* instance,
                                               const uint32_t* users,
                                               size_t user_count,
                                               mp_instance** out);

/* Copy with priority scores, user-major: channel_count scores (0..5) per
 * user, in channel order. */
MEETPOINT_API mp_status mp_instance_with_scores(const mp_instance* instance,
                                                const int* scores,
                                                size_t user_count,
                                                size_t channel_count,
                                                mp_instance** out);

MEETPOINT_API void mp_instance_free(mp_instance* instance);

MEETPOINT_API size_t mp_instance_vertex_count(const mp_instance* instance);
MEETPOINT_API size_t mp_instance_edge_count(const mp_instance* instance);
MEETPOINT_API size_t mp_instance_channel_count(const mp_instance* instance);
MEETPOINT_API const char* mp_instance_channel_name(const mp_instance* instance,
                                                   size_t channel);
MEETPOINT_API size_t mp_instance_user_count(const mp_instance* instance);
MEETPOINT_API uint32_t mp_instance_user(const mp_instance* instance,
                                        size_t index);
MEETPOINT_API int mp_instance_has_scores(const mp_instance* instance);
MEETPOINT_API int mp_instance_is_grid(const mp_instance* instance);

/* Writes up to `capacity` (target, weight) pairs of v's outgoing arcs in
 * ascending target order; *count receives the full arc count. */
MEETPOINT_API mp_status mp_instance_neighbors(const mp_instance* instance,
                                              uint32_t v, size_t channel,
                                              uint32_t* targets,
                                              double* weights, size_t capacity,
                                              size_t* count);

/* Grid instances only: the map with its user starts, newline-terminated. */
MEETPOINT_API mp_status mp_instance_render_map(const mp_instance* instance,
                                               char** out);

/* Grid instances only: row and column of vertex v. */
MEETPOINT_API mp_status mp_instance_cell_of(const mp_instance* instance,
                                            uint32_t v, size_t* row,
                                            size_t* col);

/* ---- one-shot solve ---------------------------------------------------- */

/* options may be NULL for defaults. */
MEETPOINT_API mp_status mp_solve(const mp_instance* instance,
                                 const mp_options* options, mp_solution** out);
MEETPOINT_API void mp_solution_free(mp_solution* solution);

MEETPOINT_API uint32_t mp_solution_destination(const mp_solution* solution);
MEETPOINT_API size_t mp_solution_user_count(const mp_solution* solution);
MEETPOINT_API size_t mp_solution_vertex_count(const mp_solution* solution);
/* Vertices settled by all per-user searches (work counter). */
MEETPOINT_API size_t mp_solution_settled_count(const mp_solution* solution);
/* Label of the (possibly blended) matrix channel. */
MEETPOINT_API const char* mp_solution_channel(const mp_solution* solution);

/* len must equal the vertex count. */
MEETPOINT_API mp_status mp_solution_row(const mp_solution* solution,
                                        size_t user, double* out, size_t len);
MEETPOINT_API mp_status mp_solution_scores(const mp_solution* solution,
                                           mp_score_kind kind, double* out,
                                           size_t len);

/* Exhaustive reference: Floyd-Warshall all-pairs plus scoring of every
 * vertex. timeout_seconds <= 0 means no limit; MP_ERR_TIMEOUT otherwise. */
MEETPOINT_API mp_status mp_brute_force_destination(const mp_instance* instance,
                                                   const mp_options* options,
                                                   double timeout_seconds,
                                                   uint32_t* destination);

/* ---- simulation -------------------------------------------------------- */

/* max_ticks 0 means 10 * vertex count. Returns MP_ERR_MAX_TICKS_EXCEEDED
 * with *out still set to the partial trace when users have not met. */
MEETPOINT_API mp_status mp_simulate(const mp_instance* instance,
                                    const mp_options* options,
                                    size_t max_ticks, mp_trace** out);

MEETPOINT_API mp_status mp_trace_parse(const char* text, mp_trace** out);
MEETPOINT_API void mp_trace_free(mp_trace* trace);

MEETPOINT_API uint32_t mp_trace_initial_destination(const mp_trace* trace);
MEETPOINT_API uint32_t mp_trace_final_destination(const mp_trace* trace);
MEETPOINT_API int mp_trace_converged(const mp_trace* trace);
MEETPOINT_API size_t mp_trace_user_count(const mp_trace* trace);
MEETPOINT_API size_t mp_trace_record_count(const mp_trace* trace);
MEETPOINT_API size_t mp_trace_steps(const mp_trace* trace, size_t user);

/* positions must hold mp_trace_user_count entries. */
MEETPOINT_API mp_status mp_trace_record(const mp_trace* trace, size_t index,
                                        size_t* tick, uint32_t* destination,
                                        uint32_t* positions, size_t len);

MEETPOINT_API mp_status mp_trace_serialize(const mp_trace* trace, char** out);

/* Frames for every record over a grid instance; '.' visited, 'U' users,
 * 'I' initial destination, 'D' destination. color adds ANSI escapes. */
MEETPOINT_API mp_status mp_trace_render(const mp_trace* trace,
                                        const mp_instance* grid, int color,
                                        char** out);

/* A single frame, without the tick header line. */
MEETPOINT_API mp_status mp_trace_render_frame(const mp_trace* trace,
                                              const mp_instance* grid,
                                              size_t index, int color,
                                              char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MEETPOINT_MEETPOINT_H_ */
