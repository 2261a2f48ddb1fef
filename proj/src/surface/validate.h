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

#ifndef TOTALITY_SURFACE_VALIDATE_H_
#define TOTALITY_SURFACE_VALIDATE_H_

#include <optional>
#include <vector>

#include "surface/ast.h"

namespace totality::surface {

struct ValidationResult {
  std::optional<Program> program;
  std::vector<Diagnostic> violations;

  bool ok() const { return program.has_value(); }
};

// Resolves lowercase names to variables or calls, checks full application,
// linear patterns and known constructors, and marks recursive groups.
ValidationResult validate_restrictions(const Program& p);

}  // namespace totality::surface

#endif  // TOTALITY_SURFACE_VALIDATE_H_
