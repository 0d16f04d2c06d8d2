/* Copyright 2026 The tam authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Public C interface of the tam matching-and-merging toolkit.
 *
 * A pipeline handle is created from a JSON run configuration and then
 * driven through the match / merge / eval / ar-test entry points. All
 * functions return tam_status; TAM_OK is 0 and the error codes double as
 * process exit codes. The last error message is kept per handle (and in a
 * thread-local slot for creation failures).
 */

#ifndef TAM_TAM_H_
#define TAM_TAM_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tam_pipeline tam_pipeline;

typedef enum tam_status {
  TAM_OK = 0,
  TAM_CONFIG_ERROR = 2,
  TAM_DATA_ERROR = 3,
  TAM_RUNTIME_ERROR = 4
} tam_status;

const char* tam_version(void);

/* Creates a pipeline from a config file. On failure returns the error code
 * and leaves *out untouched; the message is available via
 * tam_last_error(NULL). */
tam_status tam_pipeline_create(const char* config_path, tam_pipeline** out);
void tam_pipeline_destroy(tam_pipeline* p);

tam_status tam_pipeline_set_seed(tam_pipeline* p, uint64_t seed);
tam_status tam_pipeline_set_output_dir(tam_pipeline* p, const char* dir);
/* stage: "bootstrap" or "full" */
tam_status tam_pipeline_set_stage(tam_pipeline* p, const char* stage);

/* Entity resolution: writes clusters.tsv, run_summary.json, eval.tsv (when
 * gold data is configured) and manifest.json into the output directory. */
tam_status tam_run_match(tam_pipeline* p);

/* Redundancy elimination over a cluster file produced by tam_run_match:
 * writes merged.net, merged.onto and merge_report.tsv. */
tam_status tam_run_merge(tam_pipeline* p, const char* clusters_path);

/* Evaluation harness: parameter sweep and/or noise experiment tables. */
tam_status tam_run_eval(tam_pipeline* p);

/* Attribute resolution report over the configured datasets. */
tam_status tam_run_ar_test(tam_pipeline* p);

/* Message of the most recent failure on this handle; pass NULL for the
 * creation-failure slot of the calling thread. Never returns NULL. */
const char* tam_last_error(const tam_pipeline* p);

/* Standalone string similarity in [0,1]; metric is one of levenshtein,
 * jaro, jarowinkler, ngram. Returns TAM_CONFIG_ERROR for unknown names. */
tam_status tam_string_similarity(const char* metric, const char* a, const char* b, double* out);

/* Deterministic benchmark generators (citeseer_dat layout). */
tam_status tam_generate_benchmark(const char* dat_path, const char* gold_path,
                                  const char* corpus_path, uint64_t seed);
tam_status tam_generate_alpha_fixture(const char* dat_path, const char* gold_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TAM_TAM_H_ */
