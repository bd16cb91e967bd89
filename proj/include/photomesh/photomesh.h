// Copyright 2026 The photomesh Authors
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

#ifndef PHOTOMESH_PHOTOMESH_H
#define PHOTOMESH_PHOTOMESH_H

/* C interface to the photomesh compiler. Every call returns a pmesh_status;
 * on failure pmesh_last_error() holds a message for the calling thread.
 * Strings handed out by the library are released with pmesh_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(PMESH_BUILDING_LIBRARY)
#define PMESH_API __attribute__((visibility("default")))
#else
#define PMESH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum pmesh_status {
  PMESH_OK = 0,
  PMESH_VERIFY_FAILED = 1,
  PMESH_INPUT_ERROR = 2, /* I/O, parse, invalid argument or invalid netlist */
  PMESH_UNSUPPORTED_DIMENSION = 3,
  PMESH_NON_UNITARY = 4,
  PMESH_INTERNAL = 5 /* internal failure or unknown element */
} pmesh_status;

typedef struct pmesh_matrix pmesh_matrix;
typedef struct pmesh_netlist pmesh_netlist;

typedef struct pmesh_loss {
  double eta_b;
  double eta_p;
  double eta_w;
  double eta_ph_mzi;
  double eta_ph;
} pmesh_loss;

typedef struct pmesh_report {
  double frobenius_error;
  double phase_invariant_error;
  double global_phase;
  int pass;
} pmesh_report;

PMESH_API const char* pmesh_version(void);
PMESH_API const char* pmesh_last_error(void);
PMESH_API void pmesh_string_free(char* s);

/* Matrices. */
PMESH_API pmesh_status pmesh_matrix_haar(int dim, uint64_t seed, pmesh_matrix** out);
PMESH_API pmesh_status pmesh_matrix_from_json(const char* text, pmesh_matrix** out);
PMESH_API pmesh_status pmesh_matrix_to_json(const pmesh_matrix* m, char** out);
PMESH_API int pmesh_matrix_dim(const pmesh_matrix* m);
PMESH_API pmesh_status pmesh_matrix_get(const pmesh_matrix* m, int row, int col, double* re,
                                        double* im);
PMESH_API void pmesh_matrix_free(pmesh_matrix* m);

/* Netlists. arch is "mzi", "hybrid" or "fullpol". */
PMESH_API pmesh_status pmesh_compile(const pmesh_matrix* u, const char* arch, double tol,
                                     pmesh_netlist** out);
PMESH_API pmesh_status pmesh_netlist_from_json(const char* text, pmesh_netlist** out);
PMESH_API pmesh_status pmesh_netlist_to_json(const pmesh_netlist* nl, char** out);
PMESH_API int pmesh_netlist_dim(const pmesh_netlist* nl);
PMESH_API const char* pmesh_netlist_architecture(const pmesh_netlist* nl);
/* {"mesh": {...}, "diagonal": {...}} */
PMESH_API pmesh_status pmesh_netlist_census_json(const pmesh_netlist* nl, char** out);
PMESH_API pmesh_status pmesh_netlist_depth(const pmesh_netlist* nl, int* out);
PMESH_API pmesh_status pmesh_netlist_transmission(const pmesh_netlist* nl, const pmesh_loss* loss,
                                                  double* worst_case);
/* format is "ascii" or "svg". */
PMESH_API pmesh_status pmesh_netlist_render(const pmesh_netlist* nl, const char* format,
                                            char** out);
PMESH_API void pmesh_netlist_free(pmesh_netlist* nl);

/* Returns PMESH_VERIFY_FAILED when the error exceeds tol; *out is filled
 * either way. json (optional) receives the report with lossless transmission. */
PMESH_API pmesh_status pmesh_verify(const pmesh_netlist* nl, const pmesh_matrix* target,
                                    double tol, pmesh_report* out, char** json);

/* Comparison report for n in [n_min, n_max]; format is "json" or "md". */
PMESH_API pmesh_status pmesh_analyze(int n_min, int n_max, const pmesh_loss* loss,
                                     const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PHOTOMESH_PHOTOMESH_H */
