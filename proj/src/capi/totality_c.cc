// Copyright 2026 The Totality Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "totality/totality.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/notation.h"
#include "driver/driver.h"

struct totality_session {
  totality::driver::Config config;
  totality::driver::Report report;
  std::string rendered;
  std::string last_error;
  // Backs the string returned by totality_definition_reason.
  mutable std::string loop;
};

namespace {

using totality::driver::Report;

totality_status fail(totality_session* s, totality_status st, std::string msg) {
  s->last_error = std::move(msg);
  return st;
}

// Runs a check, reporting source errors added by it.
template <typename F>
totality_status run_check(totality_session* s, F&& check) {
  s->last_error.clear();
  const size_t before = s->report.errors.size();
  try {
    check();
  } catch (const std::exception& e) {
    return fail(s, TOTALITY_ERR_INTERNAL, e.what());
  }
  if (s->report.errors.size() > before) {
    const std::string& first = s->report.errors[before];
    const bool io = first.find("cannot read file") != std::string::npos;
    return fail(s, io ? TOTALITY_ERR_IO : TOTALITY_ERR_SOURCE, first);
  }
  return TOTALITY_OK;
}

}  // namespace

extern "C" {

const char* totality_version(void) { return "1.0.0"; }

totality_status totality_session_create(totality_session** out) {
  if (!out) return TOTALITY_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) totality_session();
  return *out ? TOTALITY_OK : TOTALITY_ERR_INTERNAL;
}

void totality_session_destroy(totality_session* s) { delete s; }

totality_status totality_set_bounds(totality_session* s, int b, int d) {
  if (!s) return TOTALITY_ERR_INVALID_ARGUMENT;
  if (b < 1 || d < 0) {
    return fail(s, TOTALITY_ERR_INVALID_ARGUMENT, "bounds must satisfy B >= 1 and D >= 0");
  }
  s->config.bound_b = b;
  s->config.bound_d = d;
  return TOTALITY_OK;
}

totality_status totality_set_subsumption(totality_session* s, int enabled) {
  if (!s) return TOTALITY_ERR_INVALID_ARGUMENT;
  s->config.subsumption = enabled != 0;
  return TOTALITY_OK;
}

totality_status totality_check_source(totality_session* s, const char* source,
                                      const char* origin) {
  if (!s || !source) return TOTALITY_ERR_INVALID_ARGUMENT;
  const std::string label = origin ? origin : "<source>";
  return run_check(s, [&] {
    totality::driver::check_source(source, label, s->config, s->report);
  });
}

totality_status totality_check_file(totality_session* s, const char* path) {
  if (!s || !path) return TOTALITY_ERR_INVALID_ARGUMENT;
  return run_check(s, [&] {
    totality::driver::check_file(path, s->config, s->report);
  });
}

void totality_reset(totality_session* s) {
  if (!s) return;
  s->report = Report();
  s->rendered.clear();
  s->last_error.clear();
}

size_t totality_definition_count(const totality_session* s) {
  return s ? totality::driver::verdicts(s->report).size() : 0;
}

totality_status totality_get_definition(const totality_session* s, size_t index,
                                         totality_definition_info* out) {
  if (!s || !out) return TOTALITY_ERR_INVALID_ARGUMENT;
  auto all = totality::driver::verdicts(s->report);
  if (index >= all.size()) return TOTALITY_ERR_OUT_OF_RANGE;
  const auto& v = *all[index];
  out->name = v.name.c_str();
  out->result = static_cast<totality_result>(v.result);
  out->bound_b = v.b;
  out->bound_d = v.d;
  out->reason_count = v.reasons.size();
  out->dependency_count = v.depends_on_unknown.size();
  out->error = v.error.c_str();
  return TOTALITY_OK;
}

totality_status totality_definition_reason(const totality_session* s, size_t index,
                                           size_t j, const char** loop) {
  if (!s || !loop) return TOTALITY_ERR_INVALID_ARGUMENT;
  auto all = totality::driver::verdicts(s->report);
  if (index >= all.size() || j >= all[index]->reasons.size()) {
    return TOTALITY_ERR_OUT_OF_RANGE;
  }
  s->loop = totality::core::to_string(all[index]->reasons[j].loop.term());
  *loop = s->loop.c_str();
  return TOTALITY_OK;
}

totality_status totality_definition_dependency(const totality_session* s,
                                               size_t index, size_t j,
                                               const char** name) {
  if (!s || !name) return TOTALITY_ERR_INVALID_ARGUMENT;
  auto all = totality::driver::verdicts(s->report);
  if (index >= all.size() || j >= all[index]->depends_on_unknown.size()) {
    return TOTALITY_ERR_OUT_OF_RANGE;
  }
  *name = all[index]->depends_on_unknown[j].c_str();
  return TOTALITY_OK;
}

totality_status totality_render(totality_session* s, unsigned flags,
                                const char** out) {
  if (!s || !out) return TOTALITY_ERR_INVALID_ARGUMENT;
  try {
    s->rendered = totality::driver::render(s->report, flags);
  } catch (const std::exception& e) {
    return fail(s, TOTALITY_ERR_INTERNAL, e.what());
  }
  *out = s->rendered.c_str();
  return TOTALITY_OK;
}

int totality_exit_code(const totality_session* s) {
  return s ? totality::driver::exit_code(s->report) : 2;
}

const char* totality_last_error(const totality_session* s) {
  return s ? s->last_error.c_str() : "invalid session";
}

}  // extern "C"
