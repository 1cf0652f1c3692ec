/*
   Copyright 2026 The fqamsim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C API of the fqamsim shared library: opaque handles, status codes, and
 * a thread-local error message. All functions returning fqamsim_status
 * leave outputs untouched on failure. */

#ifndef FQAMSIM_H
#define FQAMSIM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FQAMSIM_API __declspec(dllexport)
#else
#define FQAMSIM_API __attribute__((visibility("default")))
#endif

typedef struct fqamsim_config fqamsim_config;
typedef struct fqamsim_report fqamsim_report;

typedef enum fqamsim_status {
    FQAMSIM_OK = 0,
    FQAMSIM_ERR_CONFIG = 1,   /* bad configuration file, key, or value */
    FQAMSIM_ERR_USAGE = 2,    /* API misuse (null handle, unknown metric) */
    FQAMSIM_ERR_IO = 3,       /* file system failure */
    FQAMSIM_ERR_INTERNAL = 4, /* unexpected failure */
} fqamsim_status;

/* Library build tag (git-describe style). */
FQAMSIM_API const char* fqamsim_version(void);

/* Message of the last error on the calling thread ("" if none). */
FQAMSIM_API const char* fqamsim_last_error(void);

/* --- configuration ----------------------------------------------------- */

/* Create a configuration with the built-in defaults. */
FQAMSIM_API fqamsim_status fqamsim_config_create(fqamsim_config** out);

/* Parse a key = value config file. Unknown keys are errors; missing keys
 * keep their defaults. */
FQAMSIM_API fqamsim_status fqamsim_config_load(const char* path, fqamsim_config** out);

/* Set one key (same key names and value syntax as the config file). */
FQAMSIM_API fqamsim_status fqamsim_config_set(fqamsim_config* cfg, const char* key,
                                              const char* value);

/* Range-check all fields. */
FQAMSIM_API fqamsim_status fqamsim_config_validate(const fqamsim_config* cfg);

FQAMSIM_API void fqamsim_config_free(fqamsim_config* cfg);

/* --- campaigns ---------------------------------------------------------- */

/* Run a Monte Carlo campaign. workers <= 0 selects hardware concurrency;
 * results are identical for any worker count. */
FQAMSIM_API fqamsim_status fqamsim_run_campaign(const fqamsim_config* cfg, int workers,
                                                fqamsim_report** out);

/* Run the paired all-QAM / hybrid comparison over the same master seed.
 * If out_dir is non-NULL, writes all_qam/, hybrid/ and delta_summary.json
 * under it. Either report pointer may be NULL if not wanted. */
FQAMSIM_API fqamsim_status fqamsim_compare(const fqamsim_config* cfg, int workers,
                                           const char* out_dir, fqamsim_report** all_qam,
                                           fqamsim_report** hybrid);

/* --- reports ------------------------------------------------------------ */

/* Metric names: "available_rate_95", "average_rate", "peak_rate_5"
 * (bits/s). ci_lo / ci_hi are the bootstrap 95% interval; any output
 * pointer may be NULL. */
FQAMSIM_API fqamsim_status fqamsim_report_metric(const fqamsim_report* report,
                                                 const char* name, double* value,
                                                 double* ci_lo, double* ci_hi);

/* Number of per-user rate samples in the report (-1 on null handle). */
FQAMSIM_API long long fqamsim_report_sample_count(const fqamsim_report* report);

/* Write summary.json, samples.csv and cdf.csv into out_dir. */
FQAMSIM_API fqamsim_status fqamsim_report_write(const fqamsim_report* report,
                                                const char* out_dir);

FQAMSIM_API void fqamsim_report_free(fqamsim_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FQAMSIM_H */
