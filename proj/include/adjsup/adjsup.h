// Copyright 2026 The adjsup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the adjoint error-suppression simulator.
 *
 * Objects are opaque handles created by adjsup_*_create / adjsup_run_* and
 * released with the matching *_destroy. Every fallible call returns an
 * adjsup_status; on failure adjsup_last_error() holds a message for the
 * calling thread. Handles may be used from any thread but not concurrently
 * with their own destroy call.
 */

#ifndef ADJSUP_ADJSUP_H
#define ADJSUP_ADJSUP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ADJSUP_API __declspec(dllexport)
#else
#define ADJSUP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adjsup_status {
    ADJSUP_OK = 0,
    ADJSUP_ERR_CONFIG = 1,    /* invalid parameters */
    ADJSUP_ERR_NO_OUTPUT = 2, /* everything absorbed; value undefined */
    ADJSUP_ERR_INVARIANT = 3, /* internal protocol invariant broken */
    ADJSUP_ERR_NULL_ARG = 4,
    ADJSUP_ERR_RANGE = 5,     /* index out of range */
    ADJSUP_ERR_INTERNAL = 6
} adjsup_status;

typedef struct adjsup_params adjsup_params;
typedef struct adjsup_result adjsup_result;
typedef struct adjsup_mc adjsup_mc;
typedef struct adjsup_validation adjsup_validation;

ADJSUP_API const char *adjsup_version(void);
ADJSUP_API const char *adjsup_status_string(adjsup_status status);
ADJSUP_API const char *adjsup_last_error(void);

/* ---- parameters ---- */

/* Default completion: permutation swapping 0 and `marked`. */
ADJSUP_API adjsup_status adjsup_params_create(
    uint32_t n_qubits, double p, uint32_t k, uint32_t marked, adjsup_params **out);
/* `completion` has 2^n_qubits entries, a permutation with completion[0] == marked. */
ADJSUP_API adjsup_status adjsup_params_create_with_completion(
    uint32_t n_qubits, double p, uint32_t k, uint32_t marked, const uint32_t *completion, size_t length,
    adjsup_params **out);
ADJSUP_API adjsup_status adjsup_params_get(
    const adjsup_params *params, uint32_t *n_qubits, double *p, uint32_t *k, uint32_t *marked);
ADJSUP_API void adjsup_params_destroy(adjsup_params *params);

/* ---- closed forms ---- */

typedef struct adjsup_analytic_point {
    uint32_t n_qubits;
    double p;
    uint32_t k;
    double epsilon;
    double log_epsilon; /* natural log; -inf at p = 0 */
    double zeta;
    double survival; /* 1 - zeta, precise when tiny */
    double expected_runs;
    double log_correct_weight;
    double log_wrong_weight_total;
} adjsup_analytic_point;

ADJSUP_API adjsup_status adjsup_analytic(uint32_t n_qubits, double p, uint32_t k, adjsup_analytic_point *out);

/* ---- protocol simulation ---- */

typedef struct adjsup_cycle {
    uint32_t applications;
    double survival;
    double correct_weight;
    double wrong_weight;
} adjsup_cycle;

ADJSUP_API adjsup_status adjsup_run_scheme(const adjsup_params *params, adjsup_result **out);
/* Dense density-matrix oracle; n_qubits <= 6. */
ADJSUP_API adjsup_status adjsup_run_scheme_dm(const adjsup_params *params, adjsup_result **out);

ADJSUP_API adjsup_status adjsup_result_survival(const adjsup_result *result, double *out);
ADJSUP_API adjsup_status adjsup_result_absorbed(const adjsup_result *result, double *out);
/* ADJSUP_ERR_NO_OUTPUT when everything was absorbed. */
ADJSUP_API adjsup_status adjsup_result_error_rate(const adjsup_result *result, double *out);
/* ADJSUP_ERR_NO_OUTPUT when survival never reached zero. */
ADJSUP_API adjsup_status adjsup_result_all_absorbed_at(const adjsup_result *result, uint32_t *out);
ADJSUP_API size_t adjsup_result_entry_count(const adjsup_result *result);
/* Entries in (output, ancilla) lexicographic order. */
ADJSUP_API adjsup_status adjsup_result_entry(
    const adjsup_result *result, size_t index, uint32_t *output, uint32_t *ancilla, double *weight);
ADJSUP_API size_t adjsup_result_cycle_count(const adjsup_result *result);
ADJSUP_API adjsup_status adjsup_result_cycle(const adjsup_result *result, size_t index, adjsup_cycle *out);
ADJSUP_API void adjsup_result_destroy(adjsup_result *result);

typedef struct adjsup_verify_report {
    double error_sim; /* NaN when undefined */
    double error_analytic;
    double error_abs_dev;
    double error_rel_dev;
    double survival_sim;
    double survival_analytic;
    double survival_abs_dev;
    double survival_rel_dev;
    int underflow;
    int passed;
} adjsup_verify_report;

ADJSUP_API adjsup_status adjsup_verify_against_analytic(const adjsup_result *result, adjsup_verify_report *out);

/* Runs every grid point; results[i] / statuses[i] correspond to grid[i].
 * A failing point leaves results[i] NULL and records its status; the call
 * itself only fails on bad arguments. threads = 0 uses every core. */
ADJSUP_API adjsup_status adjsup_sweep(
    const adjsup_params *const *grid, size_t count, uint32_t threads, adjsup_result **results,
    adjsup_status *statuses);

/* ---- Monte Carlo ---- */

typedef struct adjsup_mc_summary {
    uint64_t trials;
    uint64_t seed;
    uint64_t survived;
    uint64_t errors;
    double survival_freq;
    double stderr_survival;
    int has_error_freq; /* 0 when nothing survived */
    double error_freq;
    double stderr_error;
} adjsup_mc_summary;

ADJSUP_API adjsup_status adjsup_mc_estimate(
    const adjsup_params *params, uint64_t trials, uint64_t seed, uint32_t threads, adjsup_mc **out);
ADJSUP_API adjsup_status adjsup_mc_get_summary(const adjsup_mc *mc, adjsup_mc_summary *out);
ADJSUP_API size_t adjsup_mc_histogram_count(const adjsup_mc *mc);
ADJSUP_API adjsup_status adjsup_mc_histogram_entry(const adjsup_mc *mc, size_t index, uint32_t *label, uint64_t *count);
ADJSUP_API void adjsup_mc_destroy(adjsup_mc *mc);

/* ---- dense oracle comparison and validation ---- */

typedef struct adjsup_compare_report {
    double max_entry_dev;
    double max_off_diagonal;
    double trace_deficit_dev;
    double survival_dev;
    double error_rate_dev;
    double min_eigenvalue;
    int passed;
} adjsup_compare_report;

ADJSUP_API adjsup_status adjsup_dm_compare(const adjsup_params *params, adjsup_compare_report *out);

typedef struct adjsup_validate_options {
    uint32_t max_n;
    uint64_t mc_trials;
    uint64_t mc_seed;
    int inject_fault; /* nonzero: corrupt the adjoint channel (negative control) */
} adjsup_validate_options;

ADJSUP_API void adjsup_validate_options_init(adjsup_validate_options *options);
ADJSUP_API adjsup_status adjsup_validate(const adjsup_validate_options *options, adjsup_validation **out);
ADJSUP_API int adjsup_validation_passed(const adjsup_validation *validation);
ADJSUP_API size_t adjsup_validation_check_count(const adjsup_validation *validation);
ADJSUP_API size_t adjsup_validation_failure_count(const adjsup_validation *validation);
/* Human-readable summary; valid until the handle is destroyed. */
ADJSUP_API const char *adjsup_validation_text(const adjsup_validation *validation);
ADJSUP_API void adjsup_validation_destroy(adjsup_validation *validation);

#ifdef __cplusplus
}
#endif

#endif
