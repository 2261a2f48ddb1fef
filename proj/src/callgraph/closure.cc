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

#include "callgraph/closure.h"

#include <algorithm>
#include <deque>
#include <set>

#include "callgraph/extract.h"
#include "core/order.h"

namespace totality::callgraph {

std::string to_string(const CallGraph& g) {
  std::string out;
  for (const auto& e : g.edges) out += to_string(e) + "\n";
  return out;
}

bool subsumes(const Call& e, const Call& c) {
  return e.caller() == c.caller() && e.callee() == c.callee() &&
         core::sleq(e.term(), c.term());
}

CallGraph build_callgraph(const std::vector<std::pair<std::string, Term>>& defs,
                          int b, int d) {
  CallGraph g;
  g.b = b;
  g.d = d;
  std::set<std::string> group;
  for (const auto& [name, t] : defs) {
    g.vertices.push_back(name);
    group.insert(name);
  }
  std::set<Call> edges;
  for (const auto& [name, t] : defs) {
    for (const auto& c : extract_calls(name, t, group)) {
      for (auto& cc : split_calls(name, collapse(b, d, c.term()))) {
        edges.insert(std::move(cc));
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

CallGraph transitive_closure(const CallGraph& g, const ClosureOptions& opts) {
  std::vector<Call> edges;
  std::set<Call> seen;
  std::deque<size_t> work;
  for (const auto& e : g.edges) {
    if (seen.insert(e).second) {
      work.push_back(edges.size());
      edges.push_back(e);
    }
  }
  auto add = [&](const Call& c) {
    if (seen.count(c)) return;
    if (opts.subsumption) {
      for (const auto& e : edges) {
        if (subsumes(e, c)) return;
      }
    }
    if (edges.size() >= opts.max_edges) {
      throw core::InternalError("transitive closure exceeded " +
                                std::to_string(opts.max_edges) + " edges");
    }
    seen.insert(c);
    work.push_back(edges.size());
    edges.push_back(c);
  };
  while (!work.empty()) {
    const Call cur = edges[work.front()];
    work.pop_front();
    const size_t n = edges.size();
    for (size_t j = 0; j < n; ++j) {
      const Call other = edges[j];
      if (cur.callee() == other.caller()) {
        for (const auto& c : ccomp(g.b, g.d, other, cur)) add(c);
      }
      if (other.callee() == cur.caller()) {
        for (const auto& c : ccomp(g.b, g.d, cur, other)) add(c);
      }
    }
  }
  CallGraph out = g;
  std::sort(edges.begin(), edges.end());
  out.edges = std::move(edges);
  return out;
}

}  // namespace totality::callgraph
