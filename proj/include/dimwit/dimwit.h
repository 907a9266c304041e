// Copyright 2026 The dimwit Authors
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

/* C interface to the dimwit library.
 *
 * Objects are opaque handles created by dw_*_create-style functions and
 * released with the matching dw_*_free. Every fallible call returns a
 * dw_status; on failure a human-readable message is available from
 * dw_last_error_message() on the same thread until the next failing call.
 * Preparation indices x are 1-based; pair measurements are ordered
 * (2,1), (3,1), (3,2), (4,1), ...
 */
#ifndef DIMWIT_DIMWIT_H
#define DIMWIT_DIMWIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(DIMWIT_BUILDING_LIBRARY)
#define DIMWIT_API __attribute__((visibility("default")))
#else
#define DIMWIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dw_status {
  DW_OK = 0,
  DW_ERR_BAD_ARGUMENT = 1,
  DW_ERR_NOT_HERMITIAN = 2,
  DW_ERR_DIMENSION_MISMATCH = 3,
  DW_ERR_SHAPE_MISMATCH = 4,
  DW_ERR_NOT_PURE = 5,
  DW_ERR_NOT_A_POVM = 6,
  DW_ERR_INVALID_STATE = 7,
  DW_ERR_OUT_OF_RANGE = 8,
  DW_ERR_TOO_LARGE = 9,
  DW_ERR_INCOMPLETE_DECODING = 10,
  DW_ERR_NON_MONOTONIC = 11,
  DW_ERR_NO_CONVERGENCE = 12,
  DW_ERR_IO = 13,
  DW_ERR_PARSE = 14,
  DW_ERR_INTERNAL = 15
} dw_status;

typedef enum dw_witness {
  DW_WITNESS_GUESSING = 0,  /* U_N */
  DW_WITNESS_QUADRATIC = 1, /* W_N */
  DW_WITNESS_LINEAR = 2     /* V_N */
} dw_witness;

typedef struct dw_ensemble dw_ensemble;
typedef struct dw_measurements dw_measurements;
typedef struct dw_table dw_table;
typedef struct dw_seesaw_result dw_seesaw_result;

DIMWIT_API const char *dw_version(void);
DIMWIT_API const char *dw_status_name(dw_status status);
DIMWIT_API const char *dw_last_error_message(void);

/* Releases strings returned through char** outputs. */
DIMWIT_API void dw_string_free(char *text);

DIMWIT_API const char *dw_witness_name(dw_witness witness);
DIMWIT_API dw_status dw_parse_witness(const char *name, dw_witness *out);

/* ---- Bounds and certification ---- */

DIMWIT_API dw_status dw_quantum_bound(dw_witness witness, int n, int d, double *out);
/* *available is 0 when no closed form exists (linear witness, d != N-1). */
DIMWIT_API dw_status dw_classical_bound(dw_witness witness, int n, int d, double *out,
                                        int *available);
/* *min_classical_dim is 0 when no classical bound could be established. */
DIMWIT_API dw_status dw_certify_dimension(dw_witness witness, int n, double value,
                                          int *min_quantum_dim, int *min_classical_dim);

/* ---- Classical strategies ---- */

/* Writes the canonical optimal encoding (N symbols in 1..d) when encoding is
 * non-null; encoding_len must then be at least N. */
DIMWIT_API dw_status dw_classical_enumerate(dw_witness witness, int n, int d, double *value,
                                            int *encoding, size_t encoding_len);
DIMWIT_API dw_status dw_balanced_partition_value(int n, int d, double *out);

/* ---- Ensembles and measurements ---- */

DIMWIT_API dw_status dw_ensemble_fourier(int n, int d, dw_ensemble **out);
/* amplitudes holds n * dim interleaved (re, im) pairs, state-major. */
DIMWIT_API dw_status dw_ensemble_from_pure(size_t n, size_t dim, const double *amplitudes,
                                           dw_ensemble **out);
/* measurements may be null; otherwise it receives the file's "effects" or
 * null when the file has none. */
DIMWIT_API dw_status dw_ensemble_load(const char *path, dw_ensemble **out,
                                      dw_measurements **measurements);
DIMWIT_API dw_status dw_ensemble_save(const dw_ensemble *ensemble,
                                      const dw_measurements *measurements, const char *path);
/* Same document dw_ensemble_save writes; release with dw_string_free. */
DIMWIT_API dw_status dw_ensemble_to_json(const dw_ensemble *ensemble,
                                         const dw_measurements *measurements, char **out);
DIMWIT_API void dw_ensemble_free(dw_ensemble *ensemble);
DIMWIT_API size_t dw_ensemble_size(const dw_ensemble *ensemble);
DIMWIT_API size_t dw_ensemble_dim(const dw_ensemble *ensemble);
DIMWIT_API dw_status dw_ensemble_fidelity(const dw_ensemble *ensemble, size_t x, size_t x_prime,
                                          double *out);
DIMWIT_API dw_status dw_ensemble_trace_distance(const dw_ensemble *ensemble, size_t x,
                                                size_t x_prime, double *out);
/* tr(Omega^2) for the uniform mixture Omega of the ensemble. */
DIMWIT_API dw_status dw_ensemble_average_purity(const dw_ensemble *ensemble, double *out);

DIMWIT_API dw_status dw_measurements_helstrom(const dw_ensemble *ensemble, dw_measurements **out);
DIMWIT_API void dw_measurements_free(dw_measurements *measurements);

/* ---- Probability tables ---- */

/* witness must be quadratic or linear; it is recorded with the table. */
DIMWIT_API dw_status dw_table_born(const dw_ensemble *ensemble,
                                   const dw_measurements *measurements, dw_witness witness,
                                   dw_table **out);
/* shots == 0 gives exact (depolarized) probabilities. */
DIMWIT_API dw_status dw_table_noisy(const dw_ensemble *ensemble,
                                    const dw_measurements *measurements, dw_witness witness,
                                    double depolarizing_eta, uint64_t shots, uint64_t seed,
                                    dw_table **out);
/* Guessing table of the ensemble under its square-root measurement. */
DIMWIT_API dw_status dw_table_guessing_srm(const dw_ensemble *ensemble, dw_table **out);
DIMWIT_API dw_status dw_table_load(const char *path, dw_table **out);
DIMWIT_API dw_status dw_table_save(const dw_table *table, const char *path);
DIMWIT_API dw_status dw_table_to_json(const dw_table *table, char **out);
DIMWIT_API void dw_table_free(dw_table *table);
DIMWIT_API dw_witness dw_table_witness(const dw_table *table);
DIMWIT_API size_t dw_table_preparations(const dw_table *table);
DIMWIT_API dw_status dw_table_evaluate(const dw_table *table, dw_witness witness, double *out);

/* ---- See-saw ---- */

typedef struct dw_seesaw_config {
  dw_witness witness; /* quadratic or linear */
  int n;
  int d;
  int restarts;
  int max_iters;
  double improvement_tol;
  uint64_t seed;
} dw_seesaw_config;

/* Fills defaults: 20 restarts, 500 iterations, tolerance 1e-9, seed 1. */
DIMWIT_API void dw_seesaw_config_init(dw_seesaw_config *cfg, dw_witness witness, int n, int d);
DIMWIT_API dw_status dw_seesaw_run(const dw_seesaw_config *cfg, dw_seesaw_result **out);
DIMWIT_API void dw_seesaw_free(dw_seesaw_result *result);
DIMWIT_API double dw_seesaw_best_value(const dw_seesaw_result *result);
DIMWIT_API int dw_seesaw_iterations_used(const dw_seesaw_result *result);
DIMWIT_API size_t dw_seesaw_restart_count(const dw_seesaw_result *result);
/* Valid until dw_seesaw_free. */
DIMWIT_API const double *dw_seesaw_restart_values(const dw_seesaw_result *result);
/* Copies of the optimal states and measurements. */
DIMWIT_API dw_status dw_seesaw_solution(const dw_seesaw_result *result, dw_ensemble **ensemble,
                                        dw_measurements **measurements);
/* Ensemble file with "effects" plus run metadata. */
DIMWIT_API dw_status dw_seesaw_save(const dw_seesaw_result *result, const char *path);
DIMWIT_API dw_status dw_seesaw_to_json(const dw_seesaw_result *result, char **out);

typedef struct dw_tightness_entry {
  int n;
  int d;
  double best_value;
  double bound;
  int attained; /* bound - best_value <= tol */
  int asserted; /* N <= 7 */
} dw_tightness_entry;

/* Runs the linear-witness see-saw on every known tight (N, d) with N <= n_max.
 * *count receives the number of entries; fails with DW_ERR_BAD_ARGUMENT if
 * capacity is smaller. */
DIMWIT_API dw_status dw_verify_table2(int n_max, double tol, int restarts, uint64_t seed,
                                      dw_tightness_entry *entries, size_t capacity,
                                      size_t *count);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* DIMWIT_DIMWIT_H */
