/*
  Copyright 2026 The bvkit Authors

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

#ifndef BVKIT_BVKIT_H
#define BVKIT_BVKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef BVKIT_BUILDING
#    define BVKIT_API __declspec(dllexport)
#  else
#    define BVKIT_API __declspec(dllimport)
#  endif
#else
#  define BVKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bvkit_status {
  BVKIT_OK = 0,
  BVKIT_E_DOMAIN = 1,   /* evaluation outside a function's domain */
  BVKIT_E_ARGUMENT = 2, /* invalid input or violated precondition */
  BVKIT_E_PARSE = 3,
  BVKIT_E_IO = 4,
  BVKIT_E_INTERNAL = 5
} bvkit_status;

typedef struct bvkit_pl bvkit_pl;
typedef struct bvkit_counterexample bvkit_counterexample;
typedef struct bvkit_construction bvkit_construction;

typedef struct bvkit_tolerances {
  double eq_tol;
  int grid_n;
  double bisect_tol;
  double stop_x;
  int max_anchors;
} bvkit_tolerances;

BVKIT_API void bvkit_tolerances_default(bvkit_tolerances* out);

/* Message for the last failing call on this thread; "" when none. */
BVKIT_API const char* bvkit_last_error(void);
BVKIT_API const char* bvkit_version(void);

/* Strings returned through char** are owned by the caller. */
BVKIT_API void bvkit_string_free(char* s);

/* Piecewise-linear functions. */
BVKIT_API bvkit_status bvkit_pl_create(const double* xs, const double* ys, size_t n, bvkit_pl** out);
/* `.json` files hold {"breakpoints": [[x, y], ...]}; anything else is CSV with header x,y. */
BVKIT_API bvkit_status bvkit_pl_read(const char* path, bvkit_pl** out);
BVKIT_API bvkit_status bvkit_pl_parse_csv(const char* text, bvkit_pl** out);
BVKIT_API bvkit_status bvkit_pl_to_csv(const bvkit_pl* f, char** out);
BVKIT_API bvkit_status bvkit_pl_to_json(const bvkit_pl* f, char** out);
BVKIT_API bvkit_status bvkit_pl_size(const bvkit_pl* f, size_t* out);
/* Copies min(cap, size) breakpoints. */
BVKIT_API bvkit_status bvkit_pl_breakpoints(const bvkit_pl* f, double* xs, double* ys, size_t cap);
BVKIT_API bvkit_status bvkit_pl_eval(const bvkit_pl* f, double x, double* out);
BVKIT_API void bvkit_pl_free(bvkit_pl* f);

/* Variation. */
BVKIT_API bvkit_status bvkit_total_variation(const bvkit_pl* f, double a, double b, double* out);
BVKIT_API bvkit_status bvkit_variation_function(const bvkit_pl* f, bvkit_pl** out);
BVKIT_API bvkit_status bvkit_lipschitz_constant(const bvkit_pl* f, double* out);

/* Moduli. Modulus arguments are JSON, e.g. {"kind":"power","L":1,"alpha":0.5}. */
BVKIT_API bvkit_status bvkit_minimal_modulus(const bvkit_pl* f, double h, double* out);
/* Table on grid_n + 1 uniform offsets over [0, domain length], returned as h -> omega_f(h). */
BVKIT_API bvkit_status bvkit_minimal_modulus_table(const bvkit_pl* f, int grid_n, bvkit_pl** out);
BVKIT_API bvkit_status bvkit_is_modulus_for(const char* omega_json, const bvkit_pl* f, int grid_n, double eq_tol,
                                            int* ok, double* worst_h, double* worst_gap);

/* Counterexample. beta <= 0 selects 1/alpha - 1. */
BVKIT_API bvkit_status bvkit_counterexample_build(double alpha, double beta, int n_terms, bvkit_counterexample** out);
BVKIT_API bvkit_status bvkit_counterexample_function(const bvkit_counterexample* ce, bvkit_pl** out);
BVKIT_API bvkit_status bvkit_counterexample_report(const bvkit_counterexample* ce, char** out);
/* Writes f.csv, varfn.csv and report.json into dir, creating it if needed. */
BVKIT_API bvkit_status bvkit_counterexample_write(const bvkit_counterexample* ce, const char* dir);
BVKIT_API void bvkit_counterexample_free(bvkit_counterexample* ce);

/* Construction. tol may be NULL for defaults. */
BVKIT_API bvkit_status bvkit_construction_build(const char* omega_json, const char* omega_prime_json, double sup_norm,
                                                const bvkit_tolerances* tol, bvkit_construction** out);
BVKIT_API bvkit_status bvkit_construction_passed(const bvkit_construction* c, int* out);
BVKIT_API bvkit_status bvkit_construction_function(const bvkit_construction* c, bvkit_pl** out);
BVKIT_API bvkit_status bvkit_construction_majorant(const bvkit_construction* c, bvkit_pl** out);
/* Writes the anchor count to *n and copies min(cap, count) anchors. */
BVKIT_API bvkit_status bvkit_construction_anchors(const bvkit_construction* c, double* buf, size_t cap, size_t* n);
BVKIT_API bvkit_status bvkit_construction_diagnostics(const bvkit_construction* c, char** out);
/* Writes anchors.json, f.csv, V.csv and diagnostics.json into dir. */
BVKIT_API bvkit_status bvkit_construction_write(const bvkit_construction* c, const char* dir);
BVKIT_API void bvkit_construction_free(bvkit_construction* c);

#ifdef __cplusplus
}
#endif

#endif /* BVKIT_BVKIT_H */
