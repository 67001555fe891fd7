/* SPDX-License-Identifier: Apache-2.0
 *
 * hrnsim - link-level Monte Carlo simulator for relay, reflective-surface,
 * and hybrid relaying networks
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the hrnsim shared library. All simulator state lives behind
 * the opaque hrnsim_experiment handle; every function returns a status code
 * and leaves a human-readable message for hrnsim_last_error() on failure.
 *
 * Typical use:
 *
 *   hrnsim_experiment *exp = NULL;
 *   hrnsim_experiment_create(&exp);                  // built-in defaults
 *   hrnsim_experiment_apply_preset(exp, "fig2a");
 *   hrnsim_experiment_set_seed(exp, 7);
 *   hrnsim_experiment_run(exp);
 *   hrnsim_experiment_write_csv(exp, "fig2a.csv");
 *   hrnsim_experiment_destroy(exp);
 */

#ifndef HRNSIM_H
#define HRNSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hrnsim_status
{
    HRNSIM_OK = 0,
    HRNSIM_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or out-of-range value */
    HRNSIM_ERROR_PARSE = 2,            /* malformed config text */
    HRNSIM_ERROR_IO = 3,               /* file could not be read or written */
    HRNSIM_ERROR_MODEL = 4,            /* model inconsistency (e.g. non-PSD kernel) */
    HRNSIM_ERROR_INTERNAL = 5
} hrnsim_status;

/* Library version, "major.minor.patch". Ownership stays with the library. */
const char *hrnsim_version(void);

/* Message describing the most recent failure on the calling thread. Valid
 * until the next failing call on the same thread. Never NULL. */
const char *hrnsim_last_error(void);

/* Opaque experiment handle: a fully-resolved configuration plus, after a
 * successful run, the sweep results. */
typedef struct hrnsim_experiment hrnsim_experiment;

/* Creation: defaults, a config file, or config text. The config format is
 * sectioned key/value text; unknown keys are rejected and omitted keys take
 * the documented defaults. */
hrnsim_status hrnsim_experiment_create(hrnsim_experiment **out);
hrnsim_status hrnsim_experiment_create_from_file(const char *path, hrnsim_experiment **out);
hrnsim_status hrnsim_experiment_create_from_string(const char *text, hrnsim_experiment **out);
void hrnsim_experiment_destroy(hrnsim_experiment *experiment);

/* Replaces the configuration with a built-in preset: "fig2a", "fig2b" or
 * "fig2c". Clears any previous results. */
hrnsim_status hrnsim_experiment_apply_preset(hrnsim_experiment *experiment, const char *name);

/* Parses config text or a config file onto the current configuration; only
 * the keys present in the input are overridden. Clears any previous
 * results. */
hrnsim_status hrnsim_experiment_load_file(hrnsim_experiment *experiment, const char *path);
hrnsim_status hrnsim_experiment_load_string(hrnsim_experiment *experiment, const char *text);

/* Overrides the master seed. Clears any previous results. */
hrnsim_status hrnsim_experiment_set_seed(hrnsim_experiment *experiment, uint64_t seed);

/* Worker threads for the sweep; 0 means hardware concurrency. The thread
 * count never changes the numbers. */
hrnsim_status hrnsim_experiment_set_threads(hrnsim_experiment *experiment, int threads);

/* Serializes the resolved configuration (every key explicit). The returned
 * string must be released with hrnsim_string_free(). */
hrnsim_status hrnsim_experiment_resolved_config(const hrnsim_experiment *experiment,
                                                char **out_text);

/* Runs the configured sweep. Bit-identical results for identical
 * configurations, regardless of thread count. */
hrnsim_status hrnsim_experiment_run(hrnsim_experiment *experiment);

/* One aggregated result cell. Required transmit power is averaged in the dB
 * domain; total power and energy efficiency are evaluated at that
 * representative transmit power. */
typedef struct hrnsim_sweep_row
{
    char scheme[24];         /* "relay", "irs_scenario1", "irs_scenario2", "hrn" */
    char csi[8];             /* "icsi", "scsi" or "none" */
    char sweep_variable[8];  /* "M" or "R_th" */
    double sweep_value;
    double mean_tx_power_w;  /* NaN when every draw was infeasible */
    double mean_tx_power_dbm;
    double mean_total_power_w;
    double ee_bits_per_joule;
    double std_err_w;
    uint64_t infeasible_count;
    uint64_t n_realizations;
    uint64_t seed;
} hrnsim_sweep_row;

/* Result access; both require a completed run. */
hrnsim_status hrnsim_experiment_row_count(const hrnsim_experiment *experiment, size_t *out);
hrnsim_status hrnsim_experiment_row(const hrnsim_experiment *experiment, size_t index,
                                    hrnsim_sweep_row *out);

/* CSV export of the full result table (schema documented in the README).
 * Output of hrnsim_experiment_csv must be released with
 * hrnsim_string_free(). */
hrnsim_status hrnsim_experiment_csv(const hrnsim_experiment *experiment, char **out_text);
hrnsim_status hrnsim_experiment_write_csv(const hrnsim_experiment *experiment, const char *path);

void hrnsim_string_free(char *text);

/* ---- verification oracles ------------------------------------------- */

typedef struct hrnsim_verify_options
{
    int64_t m;      /* UC count for trace checks; 0 selects 64 (must be a square) */
    int64_t draws;  /* Monte Carlo draws; 0 selects 100000 */
    int64_t trials; /* random phase trials; 0 selects 1000 */
    uint64_t seed;
} hrnsim_verify_options;

typedef struct hrnsim_verify_check
{
    char name[32];
    double measured; /* check passes when measured <= bound */
    double bound;
    int passed;
} hrnsim_verify_check;

#define HRNSIM_VERIFY_MAX_CHECKS 16

/* Runs the oracle suite (trace formula vs Monte Carlo, random and exhaustive
 * phase searches, power-split grid) and writes up to `capacity` check
 * results. `options` may be NULL for the defaults. */
hrnsim_status hrnsim_verify(const hrnsim_verify_options *options, hrnsim_verify_check *checks,
                            size_t capacity, size_t *out_count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HRNSIM_H */
