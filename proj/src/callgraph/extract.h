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

#ifndef TOTALITY_CALLGRAPH_EXTRACT_H_
#define TOTALITY_CALLGRAPH_EXTRACT_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "callgraph/call.h"
#include "surface/ast.h"

namespace totality::callgraph {

// Binds each pattern variable to the chain of destructors reaching it from
// its argument parameter (argument j is x_j, counting from 1). Patterns must
// carry priorities.
std::map<std::string, Term> pattern_substitution(
    const std::vector<surface::Pattern>& patterns);

// The body with pattern variables replaced. Not normalized.
Term body_to_term(const surface::Clause& clause);

// Sum of the clause terms.
Term definition_term(const surface::Definition& def);

// The calls of t to members of `group`, normalized and split.
std::vector<Call> extract_calls(const std::string& caller, const Term& t,
                                const std::set<std::string>& group);

}  // namespace totality::callgraph

#endif  // TOTALITY_CALLGRAPH_EXTRACT_H_
