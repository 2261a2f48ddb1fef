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

#ifndef TOTALITY_TYPING_TYPES_H_
#define TOTALITY_TYPING_TYPES_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace totality::typing {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// A unification variable, or a type constructor applied to arguments.
// Rigid type variables are constructors whose name starts with a quote.
struct Type {
  bool is_var = false;
  std::string name;
  std::vector<TypePtr> args;
};

TypePtr var(const std::string& name);
TypePtr con(const std::string& name, std::vector<TypePtr> args = {});

inline bool is_rigid(const TypePtr& t) {
  return !t->is_var && !t->name.empty() && t->name[0] == '\'';
}
// Rigid or flexible type variable.
inline bool is_opaque(const TypePtr& t) { return t->is_var || is_rigid(t); }

std::string to_string(const TypePtr& t);
bool same(const TypePtr& a, const TypePtr& b);

class Subst {
 public:
  TypePtr apply(const TypePtr& t) const;
  void bind(const std::string& v, TypePtr t) { m_[v] = std::move(t); }
  const std::map<std::string, TypePtr>& bindings() const { return m_; }

 private:
  std::map<std::string, TypePtr> m_;
};

// Extends s with a most general unifier of a and b. On failure returns a
// message ("clash ..." or "occurs check ...") and leaves s partially
// extended.
std::optional<std::string> unify(const TypePtr& a, const TypePtr& b, Subst& s);

}  // namespace totality::typing

#endif  // TOTALITY_TYPING_TYPES_H_
