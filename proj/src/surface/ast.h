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

#ifndef TOTALITY_SURFACE_AST_H_
#define TOTALITY_SURFACE_AST_H_

#include <optional>
#include <string>
#include <vector>

namespace totality::surface {

struct Pos {
  int line = 0;
  int col = 0;
};

std::string to_string(const Pos& p);

struct TypeExpr {
  enum class Kind { kVar, kApp, kArrow };
  Kind kind = Kind::kApp;
  std::string name;
  // kApp: type arguments. kArrow: domain then codomain.
  std::vector<TypeExpr> args;

  bool operator==(const TypeExpr& o) const {
    return kind == o.kind && name == o.name && args == o.args;
  }
};

// Annotations filled in by typing: an index into the group's type table and
// the priority of the node's type instance. Both are ignored by equality.
struct Annotation {
  int type_id = -1;
  int priority = -1;
};

struct Pattern {
  enum class Kind { kVar, kWild, kCtor, kRecord, kEmpty, kInt };
  Kind kind = Kind::kVar;
  std::string name;
  std::vector<std::string> fields;
  std::vector<Pattern> args;
  long value = 0;
  Pos pos;
  Annotation ann;

  bool operator==(const Pattern& o) const {
    return kind == o.kind && name == o.name && fields == o.fields &&
           args == o.args && value == o.value;
  }
};

struct Expr {
  // kName is an unresolved lowercase identifier: validation turns it into a
  // kVar or a nullary kCall.
  enum class Kind { kName, kVar, kCall, kCtor, kRecord, kEmpty, kProj, kInt };
  Kind kind = Kind::kName;
  std::string name;
  std::vector<std::string> fields;
  std::vector<Expr> args;
  long value = 0;
  Pos pos;
  Annotation ann;

  bool operator==(const Expr& o) const {
    return kind == o.kind && name == o.name && fields == o.fields &&
           args == o.args && value == o.value;
  }
};

struct Clause {
  std::vector<Pattern> patterns;
  Expr body;
  Pos pos;

  bool operator==(const Clause& o) const {
    return patterns == o.patterns && body == o.body;
  }
};

struct Definition {
  std::string name;
  std::optional<TypeExpr> type;
  std::vector<Clause> clauses;
  Pos pos;

  int arity() const {
    return clauses.empty() ? 0 : static_cast<int>(clauses.front().patterns.size());
  }
  bool operator==(const Definition& o) const {
    return name == o.name && type == o.type && clauses == o.clauses;
  }
};

// Definitions chained with `and`.
struct Group {
  std::vector<Definition> defs;
  std::optional<int> bound_b;
  std::optional<int> bound_d;
  bool recursive = false;

  bool operator==(const Group& o) const {
    return defs == o.defs && bound_b == o.bound_b && bound_d == o.bound_d;
  }
};

struct TypeItem {
  std::string name;
  TypeExpr type;
  Pos pos;

  bool operator==(const TypeItem& o) const {
    return name == o.name && type == o.type;
  }
};

struct TypeDecl {
  std::string name;
  std::vector<std::string> params;
  bool codata = false;
  std::vector<TypeItem> items;
  Pos pos;

  bool operator==(const TypeDecl& o) const {
    return name == o.name && params == o.params && codata == o.codata &&
           items == o.items;
  }
};

struct Program {
  std::vector<TypeDecl> types;
  std::vector<Group> groups;

  bool operator==(const Program& o) const {
    return types == o.types && groups == o.groups;
  }
};

struct Diagnostic {
  Pos pos;
  std::string message;
};

std::string to_string(const Diagnostic& d);

}  // namespace totality::surface

#endif  // TOTALITY_SURFACE_AST_H_
