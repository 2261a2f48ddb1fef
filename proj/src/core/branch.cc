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

#include "core/branch.h"

namespace totality::core {

namespace {

using Tag = BranchItem::Tag;

void walk(const Term& t, std::vector<BranchItem>& path, std::vector<Branch>& out) {
  auto down = [&](BranchItem item, const Term& kid) {
    path.push_back(std::move(item));
    walk(kid, path, out);
    path.pop_back();
  };
  switch (t->kind) {
    case Kind::kParam:
      if (t->index != kUnknownLeaf) out.push_back({path, t->index});
      return;
    case Kind::kConstr:
      return down({Tag::kConstr, t->name, t->priority, {}}, t->kid());
    case Kind::kConstrDual:
      return down({Tag::kConstrDual, t->name, t->priority, {}}, t->kid());
    case Kind::kProject:
      return down({Tag::kProject, t->name, t->priority, {}}, t->kid());
    case Kind::kApprox:
      return down({Tag::kApprox, "", 0, t->weight}, t->kid());
    case Kind::kRecord:
      for (size_t i = 0; i < t->kids.size(); ++i) {
        down({Tag::kField, t->fields[i], t->priority, {}}, t->kids[i]);
      }
      return;
    case Kind::kSum:
      for (const auto& s : t->kids) walk(s, path, out);
      return;
    case Kind::kDaimon:
      return;
    case Kind::kFunApp:
      throw InternalError("branches of a term containing a function name");
  }
}

}  // namespace

std::vector<Branch> branches(const Term& t) {
  std::vector<BranchItem> path;
  std::vector<Branch> out;
  walk(t, path, out);
  return out;
}

Weight branch_weight(const std::vector<BranchItem>& items, WeightMode mode) {
  const int out_sign = mode == WeightMode::kStandard ? +1 : -1;
  Weight w;
  for (const auto& it : items) {
    switch (it.tag) {
      case Tag::kConstr:
      case Tag::kField:
        w += Weight::unit(it.priority, out_sign);
        break;
      case Tag::kConstrDual:
      case Tag::kProject:
        w += Weight::unit(it.priority, -out_sign);
        break;
      case Tag::kApprox:
        w += it.weight;
        break;
      case Tag::kDaimon:
        break;
    }
  }
  return w;
}

std::string to_string(const Branch& b) {
  std::string s;
  for (const auto& it : b.items) {
    const std::string p = "@" + std::to_string(it.priority);
    switch (it.tag) {
      case Tag::kConstr:
        s += it.name + p;
        break;
      case Tag::kField:
        s += "{" + it.name + p + "}";
        break;
      case Tag::kConstrDual:
        s += it.name + "-" + p;
        break;
      case Tag::kProject:
        s += "." + it.name + p;
        break;
      case Tag::kApprox:
        s += "<" + it.weight.str() + ">";
        break;
      case Tag::kDaimon:
        s += "?";
        break;
    }
    s += " ";
  }
  return s + "x" + std::to_string(b.param);
}

}  // namespace totality::core
