/* Copyright 2026 The cacheck Authors.
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

/* C interface to the checker. A session owns one loaded .cac file. Strings
 * returned through out-parameters are heap-allocated and must be released
 * with cac_string_free. Sessions are not thread-safe; use one per thread. */

#ifndef CAC_CAC_H
#define CAC_CAC_H

#include <stddef.h>

#if defined(CAC_BUILDING_LIBRARY)
#define CAC_API __attribute__((visibility("default")))
#else
#define CAC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cac_session cac_session;

typedef enum cac_status {
  CAC_OK = 0,
  CAC_ERR_PARSE = 1,
  CAC_ERR_TYPE = 2,
  CAC_ERR_FUEL = 3,
  CAC_ERR_INVALID_ARGUMENT = 4,
  CAC_ERR_IO = 5,
  /* The operation ran, and a check it performed did not pass. */
  CAC_CHECK_FAILED = 6,
  CAC_ERR_INTERNAL = 7
} cac_status;

typedef enum cac_report_format {
  CAC_REPORT_TEXT = 0,
  CAC_REPORT_STRUCTURED = 1
} cac_report_format;

typedef enum cac_verdict {
  CAC_ADMISSIBLE = 0,
  CAC_ADMISSIBLE_WITH_ASSERTIONS = 1,
  CAC_REJECTED = 2
} cac_verdict;

CAC_API const char* cac_version(void);
CAC_API const char* cac_status_string(cac_status status);

CAC_API cac_session* cac_session_create(void);
CAC_API void cac_session_destroy(cac_session* session);

/* Reduction budget for every later call (default 10000). */
CAC_API cac_status cac_session_set_fuel(cac_session* session, size_t fuel);

CAC_API cac_status cac_load_file(cac_session* session, const char* path);
CAC_API cac_status cac_load_source(cac_session* session, const char* source,
                                   const char* name);

/* Runs the file's directives. CAC_CHECK_FAILED when one of them fails. */
CAC_API cac_status cac_check(cac_session* session, cac_report_format format,
                             char** report);

/* Normal form of a closed term, printed in surface syntax. */
CAC_API cac_status cac_normalize(cac_session* session, const char* term,
                                 char** normal_form);

/* *convertible is set to 1 or 0. */
CAC_API cac_status cac_convert(cac_session* session, const char* lhs,
                               const char* rhs, int* convertible);

/* Full admissibility pipeline. CAC_CHECK_FAILED when rejected; report and
 * verdict are filled in either way. Either out-parameter may be NULL. */
CAC_API cac_status cac_admissibility(cac_session* session,
                                     cac_report_format format, int strict,
                                     cac_verdict* verdict, char** report);

/* Message of the last failure on this session, or "" after a success.
 * Owned by the session. */
CAC_API const char* cac_last_error(const cac_session* session);

CAC_API void cac_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CAC_CAC_H */
