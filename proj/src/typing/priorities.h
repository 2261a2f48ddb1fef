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

#ifndef TOTALITY_TYPING_PRIORITIES_H_
#define TOTALITY_TYPING_PRIORITIES_H_

#include <map>
#include <stdexcept>
#include <string>

#include "surface/ast.h"
#include "typing/infer.h"

namespace totality::typing {

class PriorityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Priority of every type instance reachable from a group, keyed by the
// instance's printed form.
struct PriorityMap {
  std::map<std::string, int> of;
};

// Lines `instance ↦ priority`, sorted by priority then instance.
std::string to_string(const PriorityMap& pm);

// Least assignment with data types odd, codata types even, every instance
// below its proper subexpressions, and every strongly connected component of
// the deconstruction graph reaching above the instances that lead into it.
// Throws PriorityError if no such assignment exists.
PriorityMap assign_priorities(const GroupTyping& typing, const Declarations& decls);

// Copies priorities onto the annotated nodes of g.
void annotate_priorities(surface::Group& g, const GroupTyping& typing,
                         const PriorityMap& pm);

}  // namespace totality::typing

#endif  // TOTALITY_TYPING_PRIORITIES_H_
