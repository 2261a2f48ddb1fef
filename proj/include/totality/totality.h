/* Copyright 2026 The Totality Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/* C interface to the totality checker. A session holds the configuration and
   the accumulated results of every source checked through it. Strings
   returned by the library are owned by the session and stay valid until the
   next call that modifies it. A session must not be used from two threads at
   once; distinct sessions are independent. */

#ifndef TOTALITY_TOTALITY_H_
#define TOTALITY_TOTALITY_H_

#include <stddef.h>

#if defined(_WIN32)
#define TOTALITY_API __declspec(dllexport)
#else
#define TOTALITY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct totality_session totality_session;

typedef enum {
  TOTALITY_OK = 0,
  TOTALITY_ERR_INVALID_ARGUMENT = 1,
  TOTALITY_ERR_IO = 2,
  /* The source had syntax, restriction or type errors. */
  TOTALITY_ERR_SOURCE = 3,
  TOTALITY_ERR_OUT_OF_RANGE = 4,
  TOTALITY_ERR_INTERNAL = 5
} totality_status;

typedef enum {
  TOTALITY_TOTAL = 0,
  TOTALITY_UNKNOWN = 1,
  TOTALITY_ERROR = 2
} totality_result;

typedef enum {
  TOTALITY_RENDER_TEXT = 0,
  TOTALITY_RENDER_JSON = 1u << 0,
  TOTALITY_DUMP_PRIORITIES = 1u << 1,
  TOTALITY_DUMP_CALLGRAPH = 1u << 2,
  TOTALITY_DUMP_CLOSURE = 1u << 3
} totality_render_flags;

typedef struct {
  const char* name;
  totality_result result;
  int bound_b;
  int bound_d;
  /* Failing loops, for TOTALITY_UNKNOWN. */
  size_t reason_count;
  /* Earlier definitions not shown total that this one calls. */
  size_t dependency_count;
  /* Message, for TOTALITY_ERROR; empty otherwise. */
  const char* error;
} totality_definition_info;

TOTALITY_API const char* totality_version(void);

TOTALITY_API totality_status totality_session_create(totality_session** out);
TOTALITY_API void totality_session_destroy(totality_session* s);

/* Defaults are B=2, D=2. Requires b >= 1 and d >= 0. Source pragmas
   `-- totality: B=n, D=n` still override per group. */
TOTALITY_API totality_status totality_set_bounds(totality_session* s, int b, int d);
/* Pruning of subsumed calls during closure; on by default. */
TOTALITY_API totality_status totality_set_subsumption(totality_session* s,
                                                      int enabled);

/* Checks a source and appends its definitions. `origin` labels diagnostics
   and may be NULL. */
TOTALITY_API totality_status totality_check_source(totality_session* s,
                                                   const char* source,
                                                   const char* origin);
TOTALITY_API totality_status totality_check_file(totality_session* s,
                                                 const char* path);
/* Drops accumulated results; keeps the configuration. */
TOTALITY_API void totality_reset(totality_session* s);

TOTALITY_API size_t totality_definition_count(const totality_session* s);
TOTALITY_API totality_status totality_get_definition(
    const totality_session* s, size_t index, totality_definition_info* out);
/* The failing loop `j` of definition `index`, in term notation. */
TOTALITY_API totality_status totality_definition_reason(
    const totality_session* s, size_t index, size_t j, const char** loop);
TOTALITY_API totality_status totality_definition_dependency(
    const totality_session* s, size_t index, size_t j, const char** name);

/* Renders the accumulated report with a combination of
   totality_render_flags. */
TOTALITY_API totality_status totality_render(totality_session* s, unsigned flags,
                                             const char** out);

/* 0 if every definition is total, 1 if some are unknown, 2 on errors. */
TOTALITY_API int totality_exit_code(const totality_session* s);

/* Message of the last failed call on this session, or "". */
TOTALITY_API const char* totality_last_error(const totality_session* s);

#ifdef __cplusplus
}
#endif

#endif /* TOTALITY_TOTALITY_H_ */
