// Copyright 2026 The PhantomNet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHANTOMNET_PHANTOMNET_H_
#define PHANTOMNET_PHANTOMNET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PN_API __declspec(dllexport)
#else
#define PN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values are stable across releases. */
typedef enum pn_status {
  PN_OK = 0,
  PN_ERR_SHAPE = 1,
  PN_ERR_NUMERIC = 2,
  PN_ERR_PARAMETER = 3,
  PN_ERR_LABEL = 4,
  PN_ERR_STATE = 5,
  PN_ERR_IO = 6,
  PN_ERR_INTEGRITY = 7,
  PN_ERR_FORMAT = 8,
  PN_ERR_CONSISTENCY = 9,
  PN_ERR_DATA = 10,
  PN_ERR_DATA_RANGE = 11,
  PN_ERR_CONFIGURATION = 12,
  PN_ERR_MEMBRANE = 13,
  PN_ERR_INVALID_ARGUMENT = 14,
  PN_ERR_INTERNAL = 15
} pn_status;

PN_API const char* pn_version(void);
PN_API const char* pn_status_name(pn_status status);
/* Message of the last failed call on the calling thread; "" after success. */
PN_API const char* pn_last_error(void);
/* Process exit code for a status: 0 ok, 2 configuration, 3 membrane
   refusal, 4 numeric failure, 1 anything else. */
PN_API int pn_exit_code(pn_status status);

/* ---- experiment runs ---- */

typedef struct pn_run_options pn_run_options;

PN_API pn_status pn_run_options_create(pn_run_options** out);
PN_API void pn_run_options_destroy(pn_run_options* options);
PN_API pn_status pn_run_options_set_seed(pn_run_options* options, uint64_t seed);
PN_API pn_status pn_run_options_set_output(pn_run_options* options, const char* dir);
/* `text` has the form "p=N". */
PN_API pn_status pn_run_options_set_relaxation(pn_run_options* options, const char* text);
PN_API pn_status pn_run_options_set_verbose(pn_run_options* options, int verbose);

/* Runs one experiment. `kind` may be NULL when the config names it.
   `options` may be NULL. */
PN_API pn_status pn_run(const char* kind, const char* config_path, const pn_run_options* options);
PN_API pn_status pn_run_json(const char* kind, const char* config_json,
                             const pn_run_options* options);

/* Merges report.json files (or run directories) into table.csv/table.json. */
PN_API pn_status pn_report(const char* const* inputs, size_t count, const char* output_dir);

/* ---- datasets ---- */

typedef struct pn_dataset pn_dataset;

PN_API pn_status pn_dataset_load_idx(const char* images, const char* labels, pn_dataset** out);
/* Dataset spec as used in run configs, e.g. {"source": "blobs", ...}. */
PN_API pn_status pn_dataset_from_spec(const char* spec_json, pn_dataset** out);
PN_API size_t pn_dataset_size(const pn_dataset* dataset);
PN_API size_t pn_dataset_dim(const pn_dataset* dataset);
/* Copies size*dim samples and size labels; either pointer may be NULL. */
PN_API pn_status pn_dataset_copy(const pn_dataset* dataset, float* samples, uint32_t* labels);
PN_API void pn_dataset_destroy(pn_dataset* dataset);

/* ---- classifiers ---- */

typedef struct pn_classifier pn_classifier;

/* Loads a classifier model file or the classifier inside a bundle. */
PN_API pn_status pn_classifier_load(const char* path, pn_classifier** out);
PN_API size_t pn_classifier_input_dim(const pn_classifier* model);
PN_API size_t pn_classifier_num_classes(const pn_classifier* model);
/* x is row-major [rows x input_dim]; labels receives `rows` values. */
PN_API pn_status pn_classifier_predict(const pn_classifier* model, const float* x, size_t rows,
                                       size_t cols, uint32_t* labels);
/* Temperature softmax of the logits into probs [rows x num_classes]. */
PN_API pn_status pn_classifier_probabilities(const pn_classifier* model, const float* x,
                                             size_t rows, size_t cols, double temperature,
                                             float* probs);
/* confusion may be NULL or hold num_classes^2 counts (row = true class). */
PN_API pn_status pn_classifier_evaluate(const pn_classifier* model, const pn_dataset* test,
                                        double* accuracy, uint64_t* confusion);
PN_API void pn_classifier_destroy(pn_classifier* model);

/* ---- broadcast bundles ---- */

typedef struct pn_bundle pn_bundle;

typedef struct pn_bundle_info {
  uint32_t format_version;
  size_t input_dim;
  size_t base_classes;
  size_t gan_epoch;
  uint64_t creation_seed;
  char sha256[65];
} pn_bundle_info;

/* Verifies the checksum before anything is parsed. */
PN_API pn_status pn_bundle_load(const char* path, pn_bundle** out);
PN_API pn_status pn_bundle_get_info(const pn_bundle* bundle, pn_bundle_info* info);
PN_API pn_status pn_bundle_classifier(const pn_bundle* bundle, pn_classifier** out);
/* One phantom batch: samples [batch x input_dim] from the bundled GAN and
   targets [batch x total_classes] from the bundled classifier. */
PN_API pn_status pn_bundle_phantom_sample(const pn_bundle* bundle, double temperature,
                                          size_t total_classes, size_t batch, uint64_t seed,
                                          float* samples, float* targets);
PN_API void pn_bundle_destroy(pn_bundle* bundle);

/* ---- diagnostics ---- */

/* Gradient-checks `nets` random small classifiers. */
PN_API pn_status pn_gradient_suite(size_t nets, uint64_t seed, double epsilon,
                                   double* max_relative_error);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* PHANTOMNET_PHANTOMNET_H_ */
