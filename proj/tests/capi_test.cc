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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <memory>
#include <string>

#include "totality/totality.h"

namespace {

struct SessionDeleter {
  void operator()(totality_session* s) const { totality_session_destroy(s); }
};
using Session = std::unique_ptr<totality_session, SessionDeleter>;

Session make_session() {
  totality_session* raw = nullptr;
  EXPECT_EQ(totality_session_create(&raw), TOTALITY_OK);
  return Session(raw);
}

std::string corpus(const char* name) {
  return std::string(TOTALITY_CORPUS_DIR) + "/" + name;
}

int find(const totality_session* s, const std::string& name,
         totality_definition_info* info) {
  for (size_t i = 0; i < totality_definition_count(s); ++i) {
    if (totality_get_definition(s, i, info) == TOTALITY_OK && name == info->name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

TEST(CApi, Version) { EXPECT_STRNE(totality_version(), ""); }

TEST(CApi, NullArguments) {
  EXPECT_EQ(totality_session_create(nullptr), TOTALITY_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(totality_check_source(nullptr, "", nullptr),
            TOTALITY_ERR_INVALID_ARGUMENT);
  totality_session_destroy(nullptr);
}

TEST(CApi, BoundsValidated) {
  Session s = make_session();
  EXPECT_EQ(totality_set_bounds(s.get(), 0, 0), TOTALITY_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(totality_last_error(s.get()), "");
  EXPECT_EQ(totality_set_bounds(s.get(), 1, -1), TOTALITY_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(totality_set_bounds(s.get(), 1, 0), TOTALITY_OK);
}

TEST(CApi, NatsTotal) {
  Session s = make_session();
  ASSERT_EQ(totality_set_bounds(s.get(), 1, 1), TOTALITY_OK);
  ASSERT_EQ(totality_check_file(s.get(), corpus("nats.ch").c_str()), TOTALITY_OK);
  totality_definition_info info;
  ASSERT_GE(find(s.get(), "nats", &info), 0);
  EXPECT_EQ(info.result, TOTALITY_TOTAL);
  EXPECT_EQ(info.bound_b, 1);
  EXPECT_EQ(info.bound_d, 1);
  EXPECT_EQ(totality_exit_code(s.get()), 0);
}

TEST(CApi, BadStreamReasonsAndDependencies) {
  Session s = make_session();
  ASSERT_EQ(totality_check_file(s.get(), corpus("bad_s.ch").c_str()), TOTALITY_OK);
  totality_definition_info info;
  int i = find(s.get(), "bad_s", &info);
  ASSERT_GE(i, 0);
  EXPECT_EQ(info.result, TOTALITY_UNKNOWN);
  ASSERT_GT(info.reason_count, 0u);
  const char* loop = nullptr;
  ASSERT_EQ(totality_definition_reason(s.get(), i, 0, &loop), TOTALITY_OK);
  EXPECT_NE(std::string(loop).find("bad_s()"), std::string::npos);
  EXPECT_EQ(totality_definition_reason(s.get(), i, info.reason_count, &loop),
            TOTALITY_ERR_OUT_OF_RANGE);

  int m = find(s.get(), "magic", &info);
  ASSERT_GE(m, 0);
  ASSERT_EQ(info.dependency_count, 1u);
  const char* dep = nullptr;
  ASSERT_EQ(totality_definition_dependency(s.get(), m, 0, &dep), TOTALITY_OK);
  EXPECT_STREQ(dep, "bad_s");
  EXPECT_EQ(totality_exit_code(s.get()), 1);
}

TEST(CApi, SourceErrors) {
  Session s = make_session();
  EXPECT_EQ(totality_check_source(s.get(), "val f = (", "inline"),
            TOTALITY_ERR_SOURCE);
  EXPECT_EQ(totality_exit_code(s.get()), 2);
  EXPECT_EQ(totality_check_file(s.get(), "/nonexistent.ch"), TOTALITY_ERR_IO);
}

TEST(CApi, RenderAndReset) {
  Session s = make_session();
  ASSERT_EQ(totality_check_file(s.get(), corpus("length.ch").c_str()), TOTALITY_OK);
  const char* out = nullptr;
  ASSERT_EQ(totality_render(s.get(), TOTALITY_RENDER_TEXT, &out), TOTALITY_OK);
  EXPECT_NE(std::string(out).find("TOTAL length"), std::string::npos);
  ASSERT_EQ(totality_render(s.get(), TOTALITY_RENDER_JSON, &out), TOTALITY_OK);
  EXPECT_EQ(out[0], '{');
  totality_reset(s.get());
  EXPECT_EQ(totality_definition_count(s.get()), 0u);
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(TOTALITY_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("check " + corpus("nats.ch")), 0);
  EXPECT_EQ(run_cli("check " + corpus("bad_s.ch")), 1);
  EXPECT_EQ(run_cli("check /nonexistent.ch"), 2);
  EXPECT_EQ(run_cli("check --bound-b 1 --bound-d 0 " + corpus("swap.ch")), 1);
  EXPECT_EQ(run_cli("check --bound-b 1 --bound-d 1 " + corpus("swap.ch")), 0);
  EXPECT_EQ(run_cli("check --json --dump-closure " + corpus("sums.ch")), 0);
  EXPECT_EQ(run_cli("check --bound-b 0 " + corpus("nats.ch")), 2);
}

}  // namespace
