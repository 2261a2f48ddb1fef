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

#ifndef TOTALITY_DRIVER_DRIVER_H_
#define TOTALITY_DRIVER_DRIVER_H_

#include <string>
#include <string_view>
#include <vector>

#include "callgraph/closure.h"
#include "scp/scp.h"
#include "typing/priorities.h"

namespace totality::driver {

struct Config {
  int bound_b = 2;
  int bound_d = 2;
  bool subsumption = true;
};

struct GroupReport {
  std::vector<std::string> names;
  bool recursive = false;
  int b = 0;
  int d = 0;
  typing::PriorityMap priorities;
  callgraph::CallGraph graph;
  callgraph::CallGraph closure;
  std::vector<scp::Verdict> verdicts;
};

// Results for every checked source, in order.
struct Report {
  std::vector<GroupReport> groups;
  // Errors that stopped a whole source: I/O, syntax, restrictions.
  std::vector<std::string> errors;
};

// Checks one source and appends its groups to `report`. `origin` prefixes
// error locations.
void check_source(std::string_view source, const std::string& origin,
                  const Config& config, Report& report);

void check_file(const std::string& path, const Config& config, Report& report);

// All verdicts in source order.
std::vector<const scp::Verdict*> verdicts(const Report& report);

// 0 if everything is total, 1 if something is unknown, 2 on any error.
int exit_code(const Report& report);

enum RenderFlags : unsigned {
  kRenderJson = 1u << 0,
  kDumpPriorities = 1u << 1,
  kDumpCallgraph = 1u << 2,
  kDumpClosure = 1u << 3,
};

std::string render(const Report& report, unsigned flags);

}  // namespace totality::driver

#endif  // TOTALITY_DRIVER_DRIVER_H_
