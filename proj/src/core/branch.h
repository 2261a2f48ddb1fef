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

#ifndef TOTALITY_CORE_BRANCH_H_
#define TOTALITY_CORE_BRANCH_H_

#include <string>
#include <vector>

#include "core/term.h"

namespace totality::core {

struct BranchItem {
  enum class Tag { kConstr, kField, kConstrDual, kProject, kApprox, kDaimon };
  Tag tag;
  std::string name;
  int priority = 0;
  Weight weight;
};

// Items from the root down to a parameter.
struct Branch {
  std::vector<BranchItem> items;
  int param = 0;
};

// One branch per path to a parameter; paths through a daimon or ending at
// the unknown leaf are dropped. Expects a function-free normal form.
std::vector<Branch> branches(const Term& t);

enum class WeightMode { kStandard, kDual };

Weight branch_weight(const std::vector<BranchItem>& items, WeightMode mode);

std::string to_string(const Branch& b);

}  // namespace totality::core

#endif  // TOTALITY_CORE_BRANCH_H_
