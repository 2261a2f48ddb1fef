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

#ifndef TOTALITY_CORE_NOTATION_H_
#define TOTALITY_CORE_NOTATION_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "core/term.h"

namespace totality::core {

// Textual notation:
//   x1   C@1 t   C-@1 t   .D@0 t   {D@0 = t; E@0 = u}   f(t, u)
//   ? t   <{0:-1,1:inf}> t   t + u   0
std::string to_string(const Term& t);

class NotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses the notation above. Throws NotationError.
Term parse_term(std::string_view text);

}  // namespace totality::core

#endif  // TOTALITY_CORE_NOTATION_H_
