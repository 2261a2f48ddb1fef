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

#ifndef TOTALITY_CORE_NORMALIZE_H_
#define TOTALITY_CORE_NORMALIZE_H_

#include <string>
#include <utility>
#include <vector>

#include "core/term.h"

namespace totality::core {

// Normal form under the innermost-first strategy. Approximations sitting
// above a function occurrence absorb with negated signs.
Term nf(const Term& t);

// Head steps: each takes normal forms and returns a normal form.
Term nf_constr(const std::string& name, int priority, const Term& t);
Term nf_constr_dual(const std::string& name, int priority, const Term& t);
Term nf_project(const std::string& name, int priority, const Term& t);
Term nf_record(int priority, std::vector<std::pair<std::string, Term>> fields);
Term nf_funapp(const std::string& name, std::vector<Term> args);
Term nf_daimon(const Term& t);
Term nf_approx(const Weight& w, const Term& t);

// Shape test for the normal-form grammar.
bool is_normal_form(const Term& t);

}  // namespace totality::core

#endif  // TOTALITY_CORE_NORMALIZE_H_
