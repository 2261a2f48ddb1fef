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

#ifndef TOTALITY_CALLGRAPH_CLOSURE_H_
#define TOTALITY_CALLGRAPH_CLOSURE_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "callgraph/call.h"

namespace totality::callgraph {

struct CallGraph {
  int b = 2;
  int d = 2;
  std::vector<std::string> vertices;
  // Sorted, duplicate-free.
  std::vector<Call> edges;
};

// One line per edge.
std::string to_string(const CallGraph& g);

// Edges are the collapsed calls of each (name, definition term) to the
// group's members.
CallGraph build_callgraph(const std::vector<std::pair<std::string, Term>>& defs,
                          int b, int d);

struct ClosureOptions {
  // Drop a candidate lying above an existing edge with the same endpoints.
  bool subsumption = true;
  std::size_t max_edges = 50000;
};

// Saturates g under collapsed composition. Throws core::InternalError when
// the edge limit is exceeded.
CallGraph transitive_closure(const CallGraph& g, const ClosureOptions& opts = {});

// Same endpoints and e below c.
bool subsumes(const Call& e, const Call& c);

}  // namespace totality::callgraph

#endif  // TOTALITY_CALLGRAPH_CLOSURE_H_
