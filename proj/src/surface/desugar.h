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

#ifndef TOTALITY_SURFACE_DESUGAR_H_
#define TOTALITY_SURFACE_DESUGAR_H_

#include "surface/ast.h"

namespace totality::surface {

// Name of the synthetic external standing in for `{}` when no dummy variable
// is in scope.
inline constexpr const char* kEmptyRecord = "empty_record";

// Removes wildcards, numerals, empty records, nullary constructors and
// curried two-argument constructors. Idempotent.
Program desugar(const Program& p);

}  // namespace totality::surface

#endif  // TOTALITY_SURFACE_DESUGAR_H_
