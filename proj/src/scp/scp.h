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

#ifndef TOTALITY_SCP_SCP_H_
#define TOTALITY_SCP_SCP_H_

#include <optional>
#include <string>
#include <vector>

#include "callgraph/call.h"
#include "callgraph/closure.h"
#include "core/branch.h"

namespace totality::scp {

using callgraph::Call;

enum class Result { kTotal, kUnknown, kError };

const char* to_string(Result r);

struct LoopFailure {
  Call loop;
  std::string explanation;
};

struct Verdict {
  std::string name;
  Result result = Result::kTotal;
  int b = 0;
  int d = 0;
  std::vector<LoopFailure> reasons;
  std::string error;
  std::vector<std::string> depends_on_unknown;
};

// The largest priority whose component is strictly negative, if any.
// Infinite components are never negative.
std::optional<int> principal_negative(const core::Weight& w);

// Some collapsed self-composition of sigma is weakly coherent with it.
bool is_checked_loop(const Call& sigma, int b, int d);

// The even priority at which the dual spine weight decreases.
std::optional<int> check_condition1(const Call& sigma);

struct Condition2 {
  int arg = 0;
  core::Branch branch;
  int priority = 0;
};

// A branch of argument i ending at x_i whose weight decreases at an odd
// priority.
std::optional<Condition2> check_condition2(const Call& sigma);

// One verdict per name, in order. Any failing checked loop makes every
// member Unknown.
std::vector<Verdict> check_definition_group(const std::vector<std::string>& names,
                                            const callgraph::CallGraph& closure);

}  // namespace totality::scp

#endif  // TOTALITY_SCP_SCP_H_
