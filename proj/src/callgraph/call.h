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

#ifndef TOTALITY_CALLGRAPH_CALL_H_
#define TOTALITY_CALLGRAPH_CALL_H_

#include <string>
#include <vector>

#include "core/branch.h"
#include "core/term.h"

namespace totality::callgraph {

using core::Term;

// A normal form with exactly one function occurrence: the output spine above
// the callee, the callee, and its arguments.
class Call {
 public:
  // Throws core::InternalError unless `term` is a simple normal form with
  // exactly one function occurrence.
  Call(std::string caller, Term term);

  const std::string& caller() const { return caller_; }
  const std::string& callee() const { return callee_; }
  const Term& term() const { return term_; }
  const std::vector<core::BranchItem>& spine() const { return spine_; }
  bool spine_has_daimon() const { return daimon_; }
  const std::vector<Term>& args() const { return args_; }

  friend bool operator==(const Call& a, const Call& b) {
    return a.caller_ == b.caller_ && core::equal(a.term_, b.term_);
  }
  friend bool operator<(const Call& a, const Call& b);

 private:
  std::string caller_;
  std::string callee_;
  Term term_;
  std::vector<core::BranchItem> spine_;
  bool daimon_ = false;
  std::vector<Term> args_;
};

// `caller -> callee: term`.
std::string to_string(const Call& c);

// Collapsed composition: beta after alpha, where alpha.callee is
// beta.caller. Zero summands are dropped.
std::vector<Call> ccomp(int b, int d, const Call& beta, const Call& alpha);

// Splits a normalized term into calls from `caller`.
std::vector<Call> split_calls(const std::string& caller, const Term& t);

// cB after cD.
Term collapse(int b, int d, const Term& t);

}  // namespace totality::callgraph

#endif  // TOTALITY_CALLGRAPH_CALL_H_
