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

#ifndef TOTALITY_CORE_ORDER_H_
#define TOTALITY_CORE_ORDER_H_

#include "core/term.h"

namespace totality::core {

// Syntax-directed order on normal forms.
bool sleq(const Term& s, const Term& t);

// Weak coherence on normal forms: an inductive relation implied by the
// existence of a common non-zero upper bound.
bool sqcoh(const Term& u, const Term& v);

}  // namespace totality::core

#endif  // TOTALITY_CORE_ORDER_H_
