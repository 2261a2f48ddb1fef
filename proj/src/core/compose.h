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

#ifndef TOTALITY_CORE_COMPOSE_H_
#define TOTALITY_CORE_COMPOSE_H_

#include <map>
#include <string>

#include "core/term.h"

namespace totality::core {

// Simultaneous substitution of parameters. Unbound parameters stay.
Term substitute(const Term& t, const std::map<int, Term>& bindings);

// t1 composed with t2 at fname: every fname(u1..un) in t1 becomes
// t2[x_j := u_j composed with t2]. The result is normalized.
Term compose(const Term& t1, const Term& t2, const std::string& fname);

// The same substitution without normalizing. Associative on the nose; the
// normalized version is not, since normalizing forgets record fields whose
// later instantiation could have been 0.
Term compose_unnormalized(const Term& t1, const Term& t2, const std::string& fname);

}  // namespace totality::core

#endif  // TOTALITY_CORE_COMPOSE_H_
