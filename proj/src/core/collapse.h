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

#ifndef TOTALITY_CORE_COLLAPSE_H_
#define TOTALITY_CORE_COLLAPSE_H_

#include "core/term.h"

namespace totality::core {

// Rounds every stored weight component into [-b, b) or to infinity.
Term collapse_weights(int b, const Term& t);

// Keeps at most d constructor layers on every path and at most d destructors
// at the end of every destructor chain, absorbing the rest into weights.
// Expects a normal form; returns one.
Term collapse_depth(int d, const Term& t);

}  // namespace totality::core

#endif  // TOTALITY_CORE_COLLAPSE_H_
