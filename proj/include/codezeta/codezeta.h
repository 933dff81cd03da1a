// Copyright 2026 The codezeta Authors.
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

/* C interface to codezeta. Codes are opaque handles; every analysis
 * returns a JSON document as a heap string owned by the caller and
 * released with cz_string_free. */

#ifndef CODEZETA_H
#define CODEZETA_H

#include <stdint.h>

#if defined(_WIN32)
#define CZ_API __declspec(dllexport)
#else
#define CZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cz_code cz_code;

typedef enum cz_status {
  CZ_OK = 0,
  /* A report was produced but one of its checks failed, or a
   * mathematical consistency check aborted the computation. */
  CZ_CHECK_FAILED = 1,
  CZ_ERR_USAGE = 2,
  CZ_ERR_PARSE = 3,
  CZ_ERR_VALIDATION = 4,
  CZ_ERR_CAPACITY = 5,
  CZ_ERR_UNSUPPORTED_FIELD = 6,
  CZ_ERR_DOMAIN = 7,
  CZ_ERR_IO = 8,
  CZ_ERR_INTERNAL = 9
} cz_status;

CZ_API const char* cz_version(void);

/* Message for the last failing call on this thread; "" if none. */
CZ_API const char* cz_last_error(void);

/* Process exit code for a status: 0 ok, 1 check failed, 2 otherwise. */
CZ_API int cz_exit_code(cz_status status);

/* Caps enumeration worker threads; 0 restores the default. */
CZ_API void cz_set_worker_count(unsigned count);

CZ_API cz_status cz_code_parse(const char* text, cz_code** out);
CZ_API cz_status cz_code_load(const char* path, cz_code** out);
CZ_API void cz_code_free(cz_code* code);
CZ_API int cz_code_q(const cz_code* code);
CZ_API int cz_code_length(const cz_code* code);
CZ_API int cz_code_dimension(const cz_code* code);

/* On CZ_OK and on a failed check with a finished report, *json_out holds
 * the report; otherwise it is set to NULL. */
CZ_API cz_status cz_report_weights(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_zeta(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_rankgen(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_greene(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_twovar(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_bounds(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_clifford(const cz_code* code, int exhaustive, uint64_t samples, uint64_t seed,
                                    char** json_out);
CZ_API cz_status cz_report_full(const cz_code* code, char** json_out);
CZ_API cz_status cz_report_extremal(int q, int c, int n, int ultraspherical, char** json_out);

CZ_API void cz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CODEZETA_H */
