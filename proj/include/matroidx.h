/* Copyright 2026 The Matroidx Authors.
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

/* C interface of the matroidx shared library: matroid intersection
 * instances, a (2/3 - eps)-approximation in the independence-, rank-, and
 * semi-streaming oracle models, and exact baselines.
 *
 * All functions returning mx_status leave their outputs untouched on
 * failure; mx_last_error() then carries a human-readable detail message for
 * the calling thread. */

#ifndef MATROIDX_H
#define MATROIDX_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mx_status {
  MX_OK = 0,
  MX_INVALID_ARGUMENT = 1,
  MX_INSTANCE_MISMATCH = 2,
  MX_PARSE_ERROR = 3,
  MX_BUDGET_EXCEEDED = 4,
  MX_CONTRACT_VIOLATION = 5,
  MX_STATE_CORRUPTION = 6,
  MX_EXTRACTION_FAILURE = 7,
  MX_ALGORITHM_BUG = 8,
  MX_PROTOCOL_ERROR = 9,
  MX_STREAMING_VIOLATION = 10,
  MX_IO_ERROR = 11,
  MX_INTERNAL_ERROR = 12
} mx_status;

typedef struct mx_instance mx_instance;
typedef struct mx_result mx_result;

/* Static name of a status code (never NULL, do not free). */
const char* mx_status_message(mx_status status);

/* Detail message of the last failing call on this thread (do not free). */
const char* mx_last_error(void);

/* Frees strings returned through char** outputs. */
void mx_string_free(char* s);

/* ---- Instances -------------------------------------------------------- */

mx_status mx_instance_parse(const char* json_text, mx_instance** out);
mx_status mx_instance_load(const char* path, mx_instance** out);

/* family: "bipartite", "graphic_partition", "linear_partition",
 * "partition_partition". params_json: JSON object with optional keys
 * left, right, edge_prob, edges, n, vertices, parts, capacity, dimension,
 * p, fill_known_optimum; NULL or "" for all defaults. */
mx_status mx_instance_generate(const char* family, const char* params_json,
                               uint64_t seed, mx_instance** out);

mx_status mx_instance_to_json(const mx_instance* inst, char** out_json);
int mx_instance_ground_size(const mx_instance* inst);
/* -1 when the instance does not declare a known optimum. */
int mx_instance_known_optimum(const mx_instance* inst);
void mx_instance_free(mx_instance* inst);

/* ---- Solvers ---------------------------------------------------------- */

/* Exhaustive optimum; refuses ground sets larger than 20 elements. */
mx_status mx_brute_force_optimum(const mx_instance* inst, int* out_size);

/* Exact optimum via shortest augmenting paths. */
mx_status mx_exact_optimum(const mx_instance* inst, int* out_size);

/* Greedy maximal common independent set. use_seed != 0 scans in a
 * seed-shuffled order, otherwise ascending by id. */
mx_status mx_greedy(const mx_instance* inst, uint64_t order_seed, int use_seed,
                    mx_result** out);

/* (2/3 - epsilon)-approximation. rank_mode != 0 charges rank queries
 * instead of independence queries. */
mx_status mx_solve(const mx_instance* inst, double epsilon, int rank_mode,
                   uint64_t order_seed, int use_seed, mx_result** out);

/* Semi-streaming (2/3 - epsilon)-approximation. strict != 0 turns access
 * violations into errors; strict_paper_passes != 0 charges the full pass
 * schedule of the streaming model even for steps served from memory. */
mx_status mx_stream_solve(const mx_instance* inst, double epsilon,
                          uint64_t order_seed, int use_seed, int strict,
                          int strict_paper_passes, mx_result** out);

/* ---- Results ---------------------------------------------------------- */

int mx_result_size(const mx_result* res);

/* Copies the member ids (ascending) into buffer; fails with
 * MX_INVALID_ARGUMENT when buffer_len is too small. out_len may be NULL. */
mx_status mx_result_members(const mx_result* res, int* buffer, int buffer_len,
                            int* out_len);

/* Run report (sizes, query/pass counts, branch taken) as a JSON object. */
mx_status mx_result_report_json(const mx_result* res, char** out_json);

void mx_result_free(mx_result* res);

#ifdef __cplusplus
}
#endif

#endif /* MATROIDX_H */
