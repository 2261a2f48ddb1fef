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

#include "scp/scp.h"

#include "core/order.h"

namespace totality::scp {

using core::WeightMode;

const char* to_string(Result r) {
  switch (r) {
    case Result::kTotal:
      return "total";
    case Result::kUnknown:
      return "unknown";
    case Result::kError:
      return "error";
  }
  return "?";
}

std::optional<int> principal_negative(const core::Weight& w) {
  std::optional<int> p;
  for (const auto& [q, v] : w.components()) {
    if (v < core::ZInf(0)) p = q;
  }
  return p;
}

bool is_checked_loop(const Call& sigma, int b, int d) {
  for (const auto& tau : callgraph::ccomp(b, d, sigma, sigma)) {
    if (core::sqcoh(sigma.term(), tau.term())) return true;
  }
  return false;
}

std::optional<int> check_condition1(const Call& sigma) {
  if (sigma.spine_has_daimon()) return std::nullopt;
  auto p = principal_negative(core::branch_weight(sigma.spine(), WeightMode::kDual));
  if (p && *p % 2 == 0) return p;
  return std::nullopt;
}

std::optional<Condition2> check_condition2(const Call& sigma) {
  for (size_t i = 0; i < sigma.args().size(); ++i) {
    const int x = static_cast<int>(i) + 1;
    for (const auto& br : core::branches(sigma.args()[i])) {
      if (br.param != x) continue;
      auto p = principal_negative(core::branch_weight(br.items, WeightMode::kStandard));
      if (p && *p % 2 == 1) return Condition2{x, br, *p};
    }
  }
  return std::nullopt;
}

namespace {

std::string explain(const Call& sigma) {
  std::string out;
  if (sigma.spine_has_daimon()) {
    out = "output spine contains ?";
  } else {
    out = "output weight " +
          core::branch_weight(sigma.spine(), WeightMode::kDual).str() +
          " has no even principal decrease";
  }
  out += "; no argument decreases at an odd priority";
  return out;
}

}  // namespace

std::vector<Verdict> check_definition_group(const std::vector<std::string>& names,
                                            const callgraph::CallGraph& closure) {
  std::vector<LoopFailure> failures;
  for (const auto& e : closure.edges) {
    if (e.caller() != e.callee()) continue;
    if (!is_checked_loop(e, closure.b, closure.d)) continue;
    if (check_condition1(e) || check_condition2(e)) continue;
    failures.push_back({e, explain(e)});
  }
  std::vector<Verdict> out;
  for (const auto& n : names) {
    Verdict v;
    v.name = n;
    v.b = closure.b;
    v.d = closure.d;
    v.result = failures.empty() ? Result::kTotal : Result::kUnknown;
    // Loops at the member's own vertex first.
    for (const auto& f : failures) {
      if (f.loop.caller() == n) v.reasons.push_back(f);
    }
    for (const auto& f : failures) {
      if (f.loop.caller() != n) v.reasons.push_back(f);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace totality::scp
