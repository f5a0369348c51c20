/*
 * Copyright 2026 The Smokegen Authors.
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

/*
 * C interface to smokegen: combinatorial smoke-test generation and execution
 * for machine-learning libraries.
 *
 * Conventions:
 *  - Every fallible call returns an sg_status. On failure a description is
 *    available from sg_last_error() on the same thread until the next call.
 *  - Strings returned through `char**` are owned by the caller and must be
 *    released with sg_string_free().
 *  - Handles are opaque; release them with the matching *_free function.
 *  - Option structs must be initialized with their *_init function before
 *    fields are overridden, so new fields get sane defaults.
 */

#ifndef SMOKEGEN_SMOKEGEN_H_
#define SMOKEGEN_SMOKEGEN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_INVALID_ARGUMENT = 1,
  SG_ERR_DESCRIPTOR = 2,
  SG_ERR_IO = 3,
  SG_ERR_TEMPLATE = 4,
  SG_ERR_CAMPAIGN = 5,
  SG_ERR_INTERNAL = 6
} sg_status;

typedef enum sg_mode {
  SG_MODE_CLASSIFICATION = 0,
  SG_MODE_CLUSTERING = 1
} sg_mode;

typedef enum sg_format {
  SG_FORMAT_TEXT = 0,
  SG_FORMAT_JSON = 1,
  SG_FORMAT_MARKDOWN = 2,
  SG_FORMAT_CSV = 3
} sg_format;

/* Outcome slots in sg_run_result.counts. */
enum {
  SG_OUTCOME_PASS = 0,
  SG_OUTCOME_EXPECTED_ERROR = 1,
  SG_OUTCOME_FAIL_CRASH = 2,
  SG_OUTCOME_FAIL_TIMEOUT = 3,
  SG_OUTCOME_FAIL_ADAPTER = 4,
  SG_OUTCOME_SKIPPED = 5,
  SG_OUTCOME_COUNT = 6
};

typedef struct sg_descriptor sg_descriptor;

SG_API const char* sg_version(void);
SG_API const char* sg_last_error(void);
SG_API void sg_string_free(char* s);

/* ---- descriptors ------------------------------------------------------ */

SG_API sg_status sg_descriptor_load(const char* path, sg_descriptor** out);
SG_API sg_status sg_descriptor_parse(const char* text, sg_descriptor** out);
SG_API void sg_descriptor_free(sg_descriptor* d);
SG_API const char* sg_descriptor_name(const sg_descriptor* d);
SG_API sg_mode sg_descriptor_mode(const sg_descriptor* d);
SG_API sg_status sg_descriptor_serialize(const sg_descriptor* d, char** out);

/* ---- combinations ----------------------------------------------------- */

/* One-at-a-time combination count and full-grid count. */
SG_API sg_status sg_descriptor_counts(const sg_descriptor* d,
                                      uint64_t* linear, uint64_t* exhaustive);

/* Combination listing as text or JSON (SG_FORMAT_TEXT / SG_FORMAT_JSON). */
SG_API sg_status sg_expand(const sg_descriptor* d, sg_format format,
                           char** out);

/* Number of run_test requests a campaign over `descriptors` would issue.
 * `tests` filters the catalog by name; pass n_tests = 0 for all. */
SG_API sg_status sg_campaign_size(const sg_descriptor* const* descriptors,
                                  size_t n_descriptors,
                                  const char* const* tests, size_t n_tests,
                                  uint64_t* out);

/* ---- catalog and data ------------------------------------------------- */

/* JSON array of catalog entries for a mode. */
SG_API sg_status sg_catalog_json(sg_mode mode, char** out);

typedef struct sg_data_options {
  uint64_t seed;
  size_t n;
  size_t m;
} sg_data_options;

SG_API void sg_data_options_init(sg_data_options* o);

/* Writes CSV, ARFF and manifest files for the selected tests into out_dir.
 * `listing` (optional) receives a JSON array of the manifests written. */
SG_API sg_status sg_generate_data(const sg_data_options* options,
                                  sg_mode mode, const char* const* tests,
                                  size_t n_tests, const char* out_dir,
                                  char** listing);

/* Renders a test suite for one descriptor from a template file. Datasets are
 * written to data_dir. */
SG_API sg_status sg_emit_suite(const sg_descriptor* d,
                               const char* template_path,
                               const char* const* tests, size_t n_tests,
                               const sg_data_options* options,
                               const char* data_dir, const char* out_path,
                               size_t* stanzas);

/* ---- execution -------------------------------------------------------- */

typedef struct sg_run_options {
  sg_data_options data;
  int64_t timeout_ms;
  size_t parallelism;
  const char* const* tests;
  size_t n_tests;
  /* Per-test timeout overrides, parallel arrays. */
  const char* const* override_tests;
  const int64_t* override_timeout_ms;
  size_t n_overrides;
  const char* const* adapter_argv;
  size_t adapter_argc;
  const char* work_dir;
  /* <= 0 means unset. */
  int memory_limit_mb;
  /* Optional file receiving adapter stderr. */
  const char* adapter_log;
} sg_run_options;

typedef struct sg_run_result {
  size_t total;
  size_t counts[SG_OUTCOME_COUNT];
  size_t failures;
} sg_run_result;

SG_API void sg_run_options_init(sg_run_options* o);

/* Runs the campaign and writes the JSON report to report_path. */
SG_API sg_status sg_run(const sg_descriptor* const* descriptors,
                        size_t n_descriptors, const sg_run_options* options,
                        const char* report_path, sg_run_result* result);

/* Renders an existing report as Markdown, CSV or JSON summary. */
SG_API sg_status sg_report_render(const char* report_path, sg_format format,
                                  char** out, sg_run_result* result);

/* Serves the built-in mock adapter on stdin/stdout until EOF. */
SG_API sg_status sg_mock_adapter_serve(const char* const* rules,
                                       size_t n_rules);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* SMOKEGEN_SMOKEGEN_H_ */
