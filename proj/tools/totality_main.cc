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

// totality check FILE... [--bound-b N] [--bound-d N] [--json]
//     [--dump-priorities] [--dump-callgraph] [--dump-closure]
//     [--no-subsumption]

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "totality/totality.h"

int main(int argc, char** argv) {
  CLI::App app{"Totality checker for first-order recursive definitions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", totality_version());

  CLI::App* check = app.add_subcommand("check", "Check the definitions of source files");
  std::vector<std::string> files;
  int bound_b = 2;
  int bound_d = 2;
  bool json = false;
  bool dump_priorities = false;
  bool dump_callgraph = false;
  bool dump_closure = false;
  bool no_subsumption = false;
  check->add_option("FILE", files, "Source files")->required();
  check->add_option("--bound-b", bound_b, "Weight bound B")
      ->check(CLI::Range(1, 1 << 20));
  check->add_option("--bound-d", bound_d, "Depth bound D")
      ->check(CLI::Range(0, 1 << 20));
  check->add_flag("--json", json, "Machine-readable report");
  check->add_flag("--dump-priorities", dump_priorities, "Print type priorities");
  check->add_flag("--dump-callgraph", dump_callgraph, "Print the call graphs");
  check->add_flag("--dump-closure", dump_closure, "Print the closed call graphs");
  check->add_flag("--no-subsumption", no_subsumption,
                  "Keep calls lying above existing ones during closure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  totality_session* raw = nullptr;
  if (totality_session_create(&raw) != TOTALITY_OK) return 2;
  std::unique_ptr<totality_session, void (*)(totality_session*)> session(
      raw, totality_session_destroy);
  if (totality_set_bounds(raw, bound_b, bound_d) != TOTALITY_OK) {
    std::fprintf(stderr, "totality: %s\n", totality_last_error(raw));
    return 2;
  }
  totality_set_subsumption(raw, no_subsumption ? 0 : 1);

  for (const auto& f : files) {
    totality_status st = totality_check_file(raw, f.c_str());
    if (st == TOTALITY_ERR_INTERNAL) {
      std::fprintf(stderr, "totality: internal error: %s\n", totality_last_error(raw));
    }
  }

  unsigned flags = 0;
  if (json) flags |= TOTALITY_RENDER_JSON;
  if (dump_priorities) flags |= TOTALITY_DUMP_PRIORITIES;
  if (dump_callgraph) flags |= TOTALITY_DUMP_CALLGRAPH;
  if (dump_closure) flags |= TOTALITY_DUMP_CLOSURE;
  const char* out = nullptr;
  if (totality_render(raw, flags, &out) != TOTALITY_OK) {
    std::fprintf(stderr, "totality: %s\n", totality_last_error(raw));
    return 2;
  }
  std::fputs(out, stdout);
  return totality_exit_code(raw);
}
