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

#include "callgraph/call.h"

#include "core/collapse.h"
#include "core/compose.h"
#include "core/notation.h"

namespace totality::callgraph {

using core::BranchItem;
using core::Kind;

Call::Call(std::string caller, Term term)
    : caller_(std::move(caller)), term_(std::move(term)) {
  if (term_->kind == Kind::kSum || core::count_funapps(term_) != 1) {
    throw core::InternalError("malformed call: " + core::to_string(term_));
  }
  const core::Node* n = term_.get();
  while (n->kind != Kind::kFunApp) {
    BranchItem item;
    item.name = n->name;
    item.priority = n->priority;
    switch (n->kind) {
      case Kind::kConstr:
        item.tag = BranchItem::Tag::kConstr;
        break;
      case Kind::kConstrDual:
        item.tag = BranchItem::Tag::kConstrDual;
        break;
      case Kind::kProject:
        item.tag = BranchItem::Tag::kProject;
        break;
      case Kind::kApprox:
        item.tag = BranchItem::Tag::kApprox;
        item.weight = n->weight;
        break;
      case Kind::kDaimon:
        item.tag = BranchItem::Tag::kDaimon;
        daimon_ = true;
        break;
      case Kind::kRecord: {
        item.tag = BranchItem::Tag::kField;
        const core::Node* next = nullptr;
        for (size_t i = 0; i < n->kids.size(); ++i) {
          if (n->kids[i]->has_fun) {
            item.name = n->fields[i];
            next = n->kids[i].get();
          }
        }
        spine_.push_back(item);
        n = next;
        continue;
      }
      default:
        throw core::InternalError("malformed call: " + core::to_string(term_));
    }
    spine_.push_back(item);
    n = n->kid().get();
  }
  callee_ = n->name;
  args_ = n->kids;
}

bool operator<(const Call& a, const Call& b) {
  if (a.caller_ != b.caller_) return a.caller_ < b.caller_;
  if (a.callee_ != b.callee_) return a.callee_ < b.callee_;
  return core::compare(a.term_, b.term_) < 0;
}

std::string to_string(const Call& c) {
  return c.caller() + " -> " + c.callee() + ": " + core::to_string(c.term());
}

Term collapse(int b, int d, const Term& t) {
  return core::collapse_weights(b, core::collapse_depth(d, t));
}

std::vector<Call> split_calls(const std::string& caller, const Term& t) {
  std::vector<Call> out;
  for (const auto& s : core::summands(t)) out.emplace_back(caller, s);
  return out;
}

std::vector<Call> ccomp(int b, int d, const Call& beta, const Call& alpha) {
  if (alpha.callee() != beta.caller()) {
    throw core::InternalError("ccomp: calls do not compose");
  }
  Term t = core::compose(alpha.term(), beta.term(), alpha.callee());
  return split_calls(alpha.caller(), collapse(b, d, t));
}

}  // namespace totality::callgraph
