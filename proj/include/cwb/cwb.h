/* Copyright 2026 The Contingency Workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CWB_CWB_H
#define CWB_CWB_H

#include <stdint.h>

#if defined(CWB_BUILDING_LIBRARY)
#define CWB_API __attribute__((visibility("default")))
#else
#define CWB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cwb_status {
  CWB_OK = 0,
  CWB_ERR_SYNTAX,
  CWB_ERR_BOX_NOT_ALLOWED,
  CWB_ERR_RESERVED_ATOM,
  CWB_ERR_UNKNOWN_ATOM,
  CWB_ERR_TOO_MANY_ATOMS,
  CWB_ERR_BOUND_EXCEEDED,
  CWB_ERR_INVALID_MODEL,
  CWB_ERR_INVALID_DERIVATION,
  CWB_ERR_WITNESS_NOT_FOUND,
  CWB_ERR_INVALID_ARGUMENT,
  CWB_ERR_IO,
  CWB_ERR_INTERNAL
} cwb_status;

typedef struct cwb_formula cwb_formula;
typedef struct cwb_model cwb_model;
typedef struct cwb_report cwb_report;

/* Exhaustive phase over min_states..max_states (max_states 0 skips it), then
   `trials` random models with `random_states` states. atoms is a comma
   separated list; NULL picks a default per command and "" means none. */
typedef struct cwb_search_options {
  int min_states;
  int max_states;
  uint64_t trials;
  int random_states;
  uint64_t seed;
  const char* atoms;
  int extended;
} cwb_search_options;

CWB_API void cwb_search_options_init(cwb_search_options* opts);

/* Message of the last failing call on this thread; never NULL. */
CWB_API const char* cwb_last_error(void);
CWB_API const char* cwb_status_name(cwb_status status);
CWB_API void cwb_string_free(char* s);

CWB_API cwb_status cwb_formula_parse(const char* text, int extended, cwb_formula** out);
CWB_API void cwb_formula_free(cwb_formula* f);
CWB_API cwb_status cwb_formula_render(const cwb_formula* f, char** out);
CWB_API cwb_status cwb_formula_is_tautology(const cwb_formula* f, int* out);

CWB_API cwb_status cwb_model_from_json(const char* json, cwb_model** out);
CWB_API cwb_status cwb_model_load(const char* path, cwb_model** out);
CWB_API void cwb_model_free(cwb_model* m);
CWB_API cwb_status cwb_model_to_json(const cwb_model* m, char** out);
CWB_API int cwb_model_state_count(const cwb_model* m);
/* letter is one of n, i, s, c */
CWB_API cwb_status cwb_model_has_property(const cwb_model* m, char letter, int* out);
CWB_API cwb_status cwb_model_satisfies_class(const cwb_model* m, const char* frame_class, int* out);
CWB_API cwb_status cwb_model_supplement(const cwb_model* m, cwb_model** out);
CWB_API cwb_status cwb_random_model(int states, const char* atoms, const char* frame_class, uint64_t seed,
                                    cwb_model** out);

CWB_API cwb_status cwb_truth_set(const cwb_model* m, const cwb_formula* f, int extended, uint32_t* out);
CWB_API cwb_status cwb_holds_at(const cwb_model* m, int state, const cwb_formula* f, int extended, int* out);

/* 0: valid, accepted, equal or complete. 1: countermodel, rejection or
   difference. */
CWB_API int cwb_report_outcome(const cwb_report* r);
CWB_API const char* cwb_report_text(const cwb_report* r);
CWB_API const char* cwb_report_json(const cwb_report* r);
CWB_API void cwb_report_free(cwb_report* r);

/* state < 0 reports the whole truth set */
CWB_API cwb_status cwb_check(const cwb_model* m, const cwb_formula* f, int state, int extended, cwb_report** out);
CWB_API cwb_status cwb_validity(const cwb_formula* f, const char* frame_class, const cwb_search_options* opts,
                                cwb_report** out);
CWB_API cwb_status cwb_props(const cwb_model* m, cwb_report** out);
CWB_API cwb_status cwb_supplement_report(const cwb_model* m, cwb_report** out);
CWB_API cwb_status cwb_supplement_sweep(const cwb_search_options* opts, cwb_report** out);
CWB_API cwb_status cwb_prove(const char* system, const char* derivation, cwb_report** out);
/* Axioms of `system` on its frame class. */
CWB_API cwb_status cwb_soundness(const char* system, const cwb_search_options* opts, cwb_report** out);
/* Comma separated schema names (EQU, M, C, N, M', C') on an explicit class. */
CWB_API cwb_status cwb_schema_soundness(const char* schemas, const char* frame_class, const cwb_search_options* opts,
                                        cwb_report** out);
/* strict = 0 lets arrows without a witness in the bound fall back to
   random models with 3 and then 4 states (opts->trials each, default
   20000). */
CWB_API cwb_status cwb_cube(const cwb_search_options* opts, int strict, cwb_report** out);
/* base: comma separated formulas closed under disjunction to depth 0..2 */
CWB_API cwb_status cwb_lambda_eq_model(const cwb_model* m, const char* base, int depth, cwb_report** out);
CWB_API cwb_status cwb_lambda_eq_sweep(const char* base, int depth, const cwb_search_options* opts,
                                       cwb_report** out);
CWB_API cwb_status cwb_schema_experiment(const char* frame_class, const cwb_search_options* opts, cwb_report** out);
CWB_API cwb_status cwb_monotone_experiment(const char* base, int depth, const cwb_search_options* opts,
                                           cwb_report** out);
/* list != 0 includes every model (exhaustive bound only) */
CWB_API cwb_status cwb_enumerate(const char* frame_class, const cwb_search_options* opts, int list,
                                 cwb_report** out);

#ifdef __cplusplus
}
#endif

#endif  /* CWB_CWB_H */
