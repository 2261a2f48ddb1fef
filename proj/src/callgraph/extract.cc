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

#include "callgraph/extract.h"

#include <utility>

#include "core/normalize.h"

namespace totality::callgraph {

using core::Kind;
using surface::Expr;
using surface::Pattern;

namespace {

int priority_of(const surface::Annotation& ann, const std::string& name) {
  if (ann.priority < 0) {
    throw core::InternalError("no priority on '" + name + "'");
  }
  return ann.priority;
}

void bind(const Pattern& p, const Term& ctx, std::map<std::string, Term>& out) {
  switch (p.kind) {
    case Pattern::Kind::kVar:
      out[p.name] = ctx;
      return;
    case Pattern::Kind::kCtor:
      bind(p.args.at(0),
           core::constr_dual(p.name, priority_of(p.ann, p.name), ctx), out);
      return;
    case Pattern::Kind::kRecord: {
      const int prio = priority_of(p.ann, "record");
      for (size_t i = 0; i < p.fields.size(); ++i) {
        bind(p.args[i], core::project(p.fields[i], prio, ctx), out);
      }
      return;
    }
    default:
      throw core::InternalError("pattern not desugared");
  }
}

Term translate(const Expr& e, const std::map<std::string, Term>& vars) {
  switch (e.kind) {
    case Expr::Kind::kVar: {
      auto it = vars.find(e.name);
      if (it == vars.end()) throw core::InternalError("unbound variable " + e.name);
      return it->second;
    }
    case Expr::Kind::kCall: {
      std::vector<Term> args;
      for (const auto& a : e.args) args.push_back(translate(a, vars));
      return core::funapp(e.name, std::move(args));
    }
    case Expr::Kind::kCtor:
      return core::constr(e.name, priority_of(e.ann, e.name),
                          translate(e.args.at(0), vars));
    case Expr::Kind::kRecord: {
      std::vector<std::pair<std::string, Term>> fields;
      for (size_t i = 0; i < e.fields.size(); ++i) {
        fields.emplace_back(e.fields[i], translate(e.args[i], vars));
      }
      return core::record(priority_of(e.ann, "record"), std::move(fields));
    }
    case Expr::Kind::kProj:
      return core::project(e.name, priority_of(e.ann, e.name),
                           translate(e.args.at(0), vars));
    default:
      throw core::InternalError("expression not validated");
  }
}

// Every function application becomes a daimon over its arguments.
Term daimonize(const Term& t) {
  switch (t->kind) {
    case Kind::kParam:
      return t;
    case Kind::kFunApp: {
      if (t->kids.empty()) return core::daimon(core::param(core::kUnknownLeaf));
      std::vector<Term> args;
      for (const auto& a : t->kids) args.push_back(daimonize(a));
      return core::daimon(core::sum(std::move(args)));
    }
    case Kind::kRecord: {
      std::vector<std::pair<std::string, Term>> fields;
      for (size_t i = 0; i < t->kids.size(); ++i) {
        fields.emplace_back(t->fields[i], daimonize(t->kids[i]));
      }
      return core::record(t->priority, std::move(fields));
    }
    case Kind::kSum: {
      std::vector<Term> parts;
      for (const auto& k : t->kids) parts.push_back(daimonize(k));
      return core::sum(std::move(parts));
    }
    default:
      return core::rebuild_unary(*t, daimonize(t->kid()));
  }
}

Term graph(const Term& t, const std::set<std::string>& group) {
  switch (t->kind) {
    case Kind::kParam:
      return core::zero();
    case Kind::kSum: {
      std::vector<Term> parts;
      for (const auto& k : t->kids) parts.push_back(graph(k, group));
      return core::sum(std::move(parts));
    }
    case Kind::kRecord: {
      // Records split into one single-field record per field.
      std::vector<Term> parts;
      for (size_t i = 0; i < t->kids.size(); ++i) {
        parts.push_back(
            core::record(t->priority, {{t->fields[i], graph(t->kids[i], group)}}));
      }
      return core::sum(std::move(parts));
    }
    case Kind::kFunApp: {
      std::vector<Term> parts;
      if (group.count(t->name)) {
        std::vector<Term> args;
        for (const auto& a : t->kids) args.push_back(daimonize(a));
        parts.push_back(core::funapp(t->name, std::move(args)));
      }
      for (const auto& a : t->kids) parts.push_back(core::daimon(graph(a, group)));
      return core::sum(std::move(parts));
    }
    default:
      return core::rebuild_unary(*t, graph(t->kid(), group));
  }
}

}  // namespace

std::map<std::string, Term> pattern_substitution(
    const std::vector<Pattern>& patterns) {
  std::map<std::string, Term> out;
  for (size_t j = 0; j < patterns.size(); ++j) {
    bind(patterns[j], core::param(static_cast<int>(j) + 1), out);
  }
  return out;
}

Term body_to_term(const surface::Clause& clause) {
  return translate(clause.body, pattern_substitution(clause.patterns));
}

Term definition_term(const surface::Definition& def) {
  std::vector<Term> parts;
  for (const auto& c : def.clauses) parts.push_back(body_to_term(c));
  return core::sum(std::move(parts));
}

std::vector<Call> extract_calls(const std::string& caller, const Term& t,
                                const std::set<std::string>& group) {
  return split_calls(caller, core::nf(graph(t, group)));
}

}  // namespace totality::callgraph
