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

#include "surface/validate.h"

#include <map>
#include <set>

#include "surface/desugar.h"

namespace totality::surface {

namespace {

class Validator {
 public:
  explicit Validator(const Program& p) : prog_(p) {}

  ValidationResult run() {
    collect_types();
    std::set<std::string> defined;
    for (auto& g : prog_.groups) {
      std::set<std::string> members;
      for (auto& d : g.defs) {
        if (defined.count(d.name) || members.count(d.name)) {
          error(d.pos, "duplicate definition '" + d.name + "'");
        }
        members.insert(d.name);
        arity_[d.name] = d.arity();
      }
      for (auto& d : g.defs) {
        for (auto& c : d.clauses) {
          if (static_cast<int>(c.patterns.size()) != d.arity()) {
            error(c.pos, "clauses of '" + d.name + "' disagree on arity");
          }
          check_clause(c, members, defined, g.recursive);
        }
      }
      defined.insert(members.begin(), members.end());
    }
    ValidationResult r;
    r.violations = std::move(errors_);
    if (r.violations.empty()) r.program = std::move(prog_);
    return r;
  }

 private:
  void error(Pos pos, std::string msg) { errors_.push_back({pos, std::move(msg)}); }

  void collect_types() {
    std::set<std::string> type_names;
    for (const auto& t : prog_.types) {
      if (!type_names.insert(t.name).second) {
        error(t.pos, "duplicate type '" + t.name + "'");
      }
      for (const auto& it : t.items) {
        if (ctors_.count(it.name) || dtors_.count(it.name)) {
          error(it.pos, "duplicate constructor or destructor '" + it.name + "'");
        }
        (t.codata ? dtors_ : ctors_).insert(it.name);
      }
    }
    // Built-in product fields.
    dtors_.insert("Fst");
    dtors_.insert("Snd");
  }

  void check_pattern(const Pattern& p, std::set<std::string>& vars) {
    switch (p.kind) {
      case Pattern::Kind::kVar:
        if (!vars.insert(p.name).second) {
          error(p.pos, "variable '" + p.name + "' occurs twice in a pattern");
        }
        return;
      case Pattern::Kind::kCtor:
        if (!ctors_.count(p.name)) {
          error(p.pos, "unknown constructor '" + p.name + "'");
        } else if (p.args.size() != 1) {
          error(p.pos, "constructor '" + p.name + "' applied to " +
                           std::to_string(p.args.size()) + " arguments");
        }
        break;
      case Pattern::Kind::kRecord: {
        std::set<std::string> seen;
        for (const auto& f : p.fields) {
          if (!dtors_.count(f)) error(p.pos, "unknown field '" + f + "'");
          if (!seen.insert(f).second) error(p.pos, "duplicate field '" + f + "'");
        }
        break;
      }
      case Pattern::Kind::kInt:
        error(p.pos, "numeral without a 'nat' type with Zero and Succ");
        return;
      case Pattern::Kind::kWild:
      case Pattern::Kind::kEmpty:
        error(p.pos, "pattern not desugared");
        return;
    }
    for (const auto& a : p.args) check_pattern(a, vars);
  }

  void check_clause(Clause& c, const std::set<std::string>& members,
                    const std::set<std::string>& defined, bool& recursive) {
    std::set<std::string> vars;
    for (const auto& p : c.patterns) check_pattern(p, vars);
    check_expr(c.body, vars, members, defined, recursive);
  }

  void check_call(Expr& e, const std::set<std::string>& members,
                  const std::set<std::string>& defined, bool& recursive) {
    if (e.name == kEmptyRecord && !members.count(e.name) &&
        !defined.count(e.name)) {
      if (e.args.size() > 1) error(e.pos, "empty_record takes at most one argument");
      return;
    }
    if (!members.count(e.name) && !defined.count(e.name)) {
      error(e.pos, "unbound name '" + e.name + "'");
      return;
    }
    if (members.count(e.name)) recursive = true;
    const int want = arity_[e.name];
    if (static_cast<int>(e.args.size()) != want) {
      error(e.pos, "'" + e.name + "' expects " + std::to_string(want) +
                       " arguments but is applied to " +
                       std::to_string(e.args.size()));
    }
  }

  void check_expr(Expr& e, const std::set<std::string>& vars,
                  const std::set<std::string>& members,
                  const std::set<std::string>& defined, bool& recursive) {
    switch (e.kind) {
      case Expr::Kind::kName:
      case Expr::Kind::kVar:
        if (vars.count(e.name)) {
          e.kind = Expr::Kind::kVar;
        } else {
          e.kind = Expr::Kind::kCall;
          check_call(e, members, defined, recursive);
        }
        return;
      case Expr::Kind::kCall:
        if (vars.count(e.name)) {
          error(e.pos, "variable '" + e.name + "' applied to arguments");
        } else {
          check_call(e, members, defined, recursive);
        }
        break;
      case Expr::Kind::kCtor:
        if (!ctors_.count(e.name)) {
          error(e.pos, "unknown constructor '" + e.name + "'");
        } else if (e.args.size() != 1) {
          error(e.pos, "constructor '" + e.name + "' applied to " +
                           std::to_string(e.args.size()) + " arguments");
        }
        break;
      case Expr::Kind::kProj:
        if (!dtors_.count(e.name)) error(e.pos, "unknown destructor '" + e.name + "'");
        break;
      case Expr::Kind::kRecord: {
        std::set<std::string> seen;
        for (const auto& f : e.fields) {
          if (!dtors_.count(f)) error(e.pos, "unknown field '" + f + "'");
          if (!seen.insert(f).second) error(e.pos, "duplicate field '" + f + "'");
        }
        break;
      }
      case Expr::Kind::kInt:
        error(e.pos, "numeral without a 'nat' type with Zero and Succ");
        return;
      case Expr::Kind::kEmpty:
        error(e.pos, "empty record literal not desugared");
        return;
    }
    for (auto& a : e.args) check_expr(a, vars, members, defined, recursive);
  }

  Program prog_;
  std::set<std::string> ctors_;
  std::set<std::string> dtors_;
  std::map<std::string, int> arity_;
  std::vector<Diagnostic> errors_;
};

}  // namespace

ValidationResult validate_restrictions(const Program& p) {
  return Validator(p).run();
}

}  // namespace totality::surface
