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

#ifndef TOTALITY_SURFACE_PRETTY_H_
#define TOTALITY_SURFACE_PRETTY_H_

#include <string>

#include "surface/ast.h"

namespace totality::surface {

std::string pretty_print(const Program& p);
std::string pretty_print(const TypeExpr& t);
std::string pretty_print(const Pattern& p);
std::string pretty_print(const Expr& e);

}  // namespace totality::surface

#endif  // TOTALITY_SURFACE_PRETTY_H_
