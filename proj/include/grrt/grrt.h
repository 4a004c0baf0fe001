/*********************************************************************
 * Software License Agreement (BSD License)
 *
 *  Copyright (c) 2026, The grrt Contributors
 *  All rights reserved.
 *
 *  Redistribution and use in source and binary forms, with or without
 *  modification, are permitted provided that the following conditions
 *  are met:
 *
 *   * Redistributions of source code must retain the above copyright
 *     notice, this list of conditions and the following disclaimer.
 *   * Redistributions in binary form must reproduce the above
 *     copyright notice, this list of conditions and the following
 *     disclaimer in the documentation and/or other materials provided
 *     with the distribution.
 *   * Neither the names of the copyright holders nor the names of its
 *     contributors may be used to endorse or promote products derived
 *     from this software without specific prior written permission.
 *
 *  THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
 *  "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
 *  LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS
 *  FOR A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE
 *  COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT,
 *  INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING,
 *  BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
 *  LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
 *  CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
 *  LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN
 *  ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
 *  POSSIBILITY OF SUCH DAMAGE.
 *********************************************************************/

#ifndef GRRT_GRRT_H
#define GRRT_GRRT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GRRT_BUILDING_LIBRARY)
#define GRRT_API __declspec(dllexport)
#else
#define GRRT_API __declspec(dllimport)
#endif
#else
#define GRRT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure grrt_last_error() holds a
   message for the calling thread until its next failing call. */
typedef enum grrt_status
{
    GRRT_OK = 0,
    GRRT_INVALID_ARGUMENT = 1,
    GRRT_PARSE_ERROR = 2,
    GRRT_PRECONDITION = 3,
    GRRT_SAMPLING_ERROR = 4,
    GRRT_IO_ERROR = 5,
    GRRT_INTERNAL = 6
} grrt_status;

typedef enum grrt_event_tag
{
    GRRT_EVENT_INITIAL = 0,
    GRRT_EVENT_IMPROVEMENT = 1,
    GRRT_EVENT_FINAL = 2
} grrt_event_tag;

typedef enum grrt_variant
{
    GRRT_VARIANT_GREEDY_RRT_STAR = 0,
    GRRT_VARIANT_RRT_CONNECT = 1
} grrt_variant;

typedef enum grrt_greedy_scope
{
    GRRT_SCOPE_BEST_BRIDGE = 0,
    GRRT_SCOPE_ALL_BRIDGES = 1
} grrt_greedy_scope;

typedef struct grrt_problem grrt_problem;
typedef struct grrt_result grrt_result;

/* Mirrors the C++ planner configuration; fill with grrt_planner_config_default. */
typedef struct grrt_planner_config
{
    double epsilon;
    double max_edge; /* 0 selects 0.2 x domain diagonal */
    double eta;
    int delay_rewiring;
    int prune;
    int balanced;
    int heuristic_gate;
    int greedy_scope; /* grrt_greedy_scope */
    uint64_t seed;
    double time_limit;
    uint64_t iteration_limit; /* 0 for none */
    double virtual_seconds_per_iteration;
    int stop_at_first_solution;
    size_t sample_retries_per_dimension;
    int variant; /* grrt_variant */
} grrt_planner_config;

/* Called on the planning thread for every reported cost. */
typedef void (*grrt_observer)(double elapsed, double cost, int tag, uint64_t iteration, void *user);

GRRT_API const char *grrt_version(void);
GRRT_API const char *grrt_last_error(void);
GRRT_API const char *grrt_status_string(grrt_status status);
/* Releases strings returned through char** out-parameters. */
GRRT_API void grrt_string_free(char *text);

/* kind: empty | many_homotopy | narrow_passage | double_enclosure.
   params_json may be NULL or a JSON object of snake_case geometry fields. */
GRRT_API grrt_status grrt_problem_make(const char *kind, int dim, const char *params_json, grrt_problem **out);
GRRT_API grrt_status grrt_problem_load(const char *json, grrt_problem **out);
GRRT_API grrt_status grrt_problem_save(const grrt_problem *problem, char **json_out);
GRRT_API void grrt_problem_free(grrt_problem *problem);
GRRT_API int grrt_problem_dim(const grrt_problem *problem);
/* x, a and b hold grrt_problem_dim() values. */
GRRT_API grrt_status grrt_problem_is_free(const grrt_problem *problem, const double *x, int *out);
GRRT_API grrt_status grrt_problem_segment_free(const grrt_problem *problem, const double *a, const double *b,
                                               int *out);

GRRT_API void grrt_planner_config_default(grrt_planner_config *config);
/* observer may be NULL. */
GRRT_API grrt_status grrt_plan(const grrt_problem *problem, const grrt_planner_config *config,
                               grrt_observer observer, void *user, grrt_result **out);
/* Infinite when unsolved. */
GRRT_API double grrt_result_cost(const grrt_result *result);
GRRT_API double grrt_result_initial_cost(const grrt_result *result);
GRRT_API double grrt_result_initial_time(const grrt_result *result);
GRRT_API double grrt_result_elapsed(const grrt_result *result);
GRRT_API uint64_t grrt_result_iterations(const grrt_result *result);
/* Number of states of the best path (0 when unsolved). */
GRRT_API size_t grrt_result_path_length(const grrt_result *result);
GRRT_API grrt_status grrt_result_path_state(const grrt_result *result, size_t index, double *out);
GRRT_API size_t grrt_result_event_count(const grrt_result *result);
GRRT_API grrt_status grrt_result_event(const grrt_result *result, size_t index, double *elapsed, double *cost,
                                       int *tag);
GRRT_API void grrt_result_free(grrt_result *result);

/* Benchmark harness. grrt_bench_run honours the BENCH_SEED environment
   variable and writes trials.csv, summary.json, verification.json and
   config.json into out_dir. */
GRRT_API grrt_status grrt_bench_run(const char *config_json, const char *out_dir);
GRRT_API grrt_status grrt_bench_summarize(const char *dir);
/* passed receives 1 when every check of the suite passed. */
GRRT_API grrt_status grrt_bench_verify(const char *out_dir, uint64_t seed, double scale, int *passed);
/* Builds a problem and writes its JSON document to path. */
GRRT_API grrt_status grrt_bench_problem(const char *kind, int dim, const char *params_json, const char *path);

#ifdef __cplusplus
}
#endif

#endif
