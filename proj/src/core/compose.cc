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

#include "core/compose.h"

#include <vector>

#include "core/normalize.h"

namespace totality::core {

namespace {

template <typename Leaf>
Term rebuild(const Term& t, Leaf leaf) {
  if (Term r = leaf(t)) return r;
  switch (t->kind) {
    case Kind::kParam:
      return t;
    case Kind::kConstr:
    case Kind::kConstrDual:
    case Kind::kProject:
    case Kind::kDaimon:
    case Kind::kApprox:
      return rebuild_unary(*t, rebuild(t->kid(), leaf));
    case Kind::kRecord: {
      std::vector<std::pair<std::string, Term>> fields;
      for (size_t i = 0; i < t->kids.size(); ++i) {
        fields.emplace_back(t->fields[i], rebuild(t->kids[i], leaf));
      }
      return record(t->priority, std::move(fields));
    }
    case Kind::kFunApp: {
      std::vector<Term> args;
      for (const auto& a : t->kids) args.push_back(rebuild(a, leaf));
      return funapp(t->name, std::move(args));
    }
    case Kind::kSum: {
      std::vector<Term> out;
      for (const auto& s : t->kids) out.push_back(rebuild(s, leaf));
      return sum(std::move(out));
    }
  }
  throw InternalError("unreachable term kind");
}

Term compose_raw(const Term& t1, const Term& t2, const std::string& fname) {
  return rebuild(t1, [&](const Term& t) -> Term {
    if (t->kind != Kind::kFunApp || t->name != fname) return nullptr;
    std::map<int, Term> b;
    for (size_t j = 0; j < t->kids.size(); ++j) {
      b[static_cast<int>(j) + 1] = compose_raw(t->kids[j], t2, fname);
    }
    return substitute(t2, b);
  });
}

}  // namespace

Term substitute(const Term& t, const std::map<int, Term>& bindings) {
  return rebuild(t, [&](const Term& s) -> Term {
    if (s->kind != Kind::kParam) return nullptr;
    auto it = bindings.find(s->index);
    return it == bindings.end() ? s : it->second;
  });
}

Term compose_unnormalized(const Term& t1, const Term& t2, const std::string& fname) {
  return compose_raw(t1, t2, fname);
}

Term compose(const Term& t1, const Term& t2, const std::string& fname) {
  return nf(compose_raw(t1, t2, fname));
}

}  // namespace totality::core
