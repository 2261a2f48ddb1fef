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

#ifndef TOTALITY_TYPING_INFER_H_
#define TOTALITY_TYPING_INFER_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "surface/ast.h"
#include "typing/types.h"

namespace totality::typing {

class TypeError : public std::runtime_error {
 public:
  TypeError(surface::Pos pos, const std::string& msg)
      : std::runtime_error(msg), pos(pos) {}
  surface::Pos pos;
};

// A constructor (argument -> owner) or destructor (owner -> result), with the
// owner's parameters as flexible variables.
struct ItemSig {
  std::string owner;
  TypePtr owner_type;
  TypePtr other;
};

class Declarations {
 public:
  // Also registers the built-in codata `unit` and `prod('a,'b)`.
  explicit Declarations(const surface::Program& p);

  const ItemSig* ctor(const std::string& name) const;
  const ItemSig* dtor(const std::string& name) const;
  bool is_type(const std::string& name) const { return arity_.count(name) > 0; }
  int type_arity(const std::string& name) const { return arity_.at(name); }
  bool is_codata(const std::string& name) const { return codata_.count(name) > 0; }

  // Codata types whose destructor set equals `fields`, or contains it when
  // `subset` is set.
  std::vector<std::string> records_with(const std::set<std::string>& fields,
                                        bool subset) const;

  // Argument types of the constructors of `inst`, or result types of its
  // destructors, instantiated at the arguments of `inst`.
  std::vector<TypePtr> deconstruct(const TypePtr& inst) const;

 private:
  void add(const std::string& name, const std::vector<std::string>& params,
           bool codata);
  TypePtr convert(const surface::TypeExpr& t, surface::Pos pos) const;

  std::map<std::string, int> arity_;
  std::map<std::string, std::vector<std::string>> params_;
  std::set<std::string> codata_;
  std::map<std::string, ItemSig> ctors_;
  std::map<std::string, ItemSig> dtors_;
  std::map<std::string, std::vector<std::string>> items_of_;
};

// Generalized signature: flexible variables are quantified.
struct FunSig {
  std::vector<TypePtr> params;
  TypePtr result;
};

std::string to_string(const FunSig& s);

struct GroupTyping {
  // Indexed by Annotation::type_id.
  std::vector<TypePtr> table;
  std::map<std::string, FunSig> sigs;
};

// Infers and checks the group, filling in type_id on every constructor,
// record and projection node of patterns and bodies. `env` holds the
// signatures of earlier definitions and is extended with the group's.
GroupTyping annotate_group(surface::Group& g, const Declarations& decls,
                           std::map<std::string, FunSig>& env);

}  // namespace totality::typing

#endif  // TOTALITY_TYPING_INFER_H_
