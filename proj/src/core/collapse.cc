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

#include "core/collapse.h"

#include <vector>

#include "core/normalize.h"

namespace totality::core {

Term collapse_weights(int b, const Term& t) {
  switch (t->kind) {
    case Kind::kParam:
      return t;
    case Kind::kApprox:
      return approx(collapse_weight(b, t->weight), collapse_weights(b, t->kid()));
    case Kind::kConstr:
    case Kind::kConstrDual:
    case Kind::kProject:
    case Kind::kDaimon:
      return rebuild_unary(*t, collapse_weights(b, t->kid()));
    case Kind::kRecord: {
      std::vector<std::pair<std::string, Term>> fields;
      for (size_t i = 0; i < t->kids.size(); ++i) {
        fields.emplace_back(t->fields[i], collapse_weights(b, t->kids[i]));
      }
      return record(t->priority, std::move(fields));
    }
    case Kind::kFunApp: {
      std::vector<Term> args;
      for (const auto& a : t->kids) args.push_back(collapse_weights(b, a));
      return funapp(t->name, std::move(args));
    }
    case Kind::kSum: {
      std::vector<Term> out;
      for (const auto& s : t->kids) out.push_back(collapse_weights(b, s));
      return sum(std::move(out));
    }
  }
  throw InternalError("unreachable term kind");
}

namespace {

class DepthCollapser {
 public:
  explicit DepthCollapser(int d) : d_(d) {}

  Term run(const Term& t) {
    std::vector<Term> out;
    for (const auto& s : summands(t)) out.push_back(cd(d_, s));
    return nf(sum(std::move(out)));
  }

 private:
  Term cd(int i, const Term& t) {
    switch (t->kind) {
      case Kind::kConstr:
      case Kind::kRecord:
        if (i == 0) return bottom(t);
        if (t->kind == Kind::kConstr) {
          return constr(t->name, t->priority, cd(i - 1, t->kid()));
        } else {
          std::vector<std::pair<std::string, Term>> fields;
          for (size_t k = 0; k < t->kids.size(); ++k) {
            fields.emplace_back(t->fields[k], cd_sum(i - 1, t->kids[k]));
          }
          return record(t->priority, std::move(fields));
        }
      case Kind::kApprox:
      case Kind::kDaimon:
        return nf(rebuild_unary(*t, chain(t->kid())));
      case Kind::kSum:
        return cd_sum(i, t);
      default:
        return chain(t);
    }
  }

  Term cd_sum(int i, const Term& t) {
    std::vector<Term> out;
    for (const auto& s : summands(t)) out.push_back(cd(i, s));
    return sum(std::move(out));
  }

  // Out of constructor budget: absorb everything below into a weight.
  Term bottom(const Term& t) {
    Term u = nf(approx(Weight(), t));
    std::vector<Term> out;
    for (const auto& s : summands(u)) {
      if (s->kind == Kind::kApprox || s->kind == Kind::kDaimon) {
        out.push_back(nf(rebuild_unary(*s, chain(s->kid()))));
      } else {
        out.push_back(chain(s));
      }
    }
    return sum(std::move(out));
  }

  // Keeps the d_ destructors closest to the end of a destructor chain.
  Term chain(const Term& t) {
    std::vector<const Node*> ds;
    Term cur = t;
    while (is_destructor(cur)) {
      ds.push_back(cur.get());
      cur = cur->kid();
    }
    Term end = cur;
    if (cur->kind == Kind::kFunApp) {
      std::vector<Term> args;
      for (const auto& a : cur->kids) args.push_back(run(a));
      end = funapp(cur->name, std::move(args));
    } else if (cur->kind != Kind::kParam) {
      throw InternalError("depth collapse on a term outside normal form");
    }
    const size_t n = ds.size();
    const size_t keep = static_cast<size_t>(d_);
    Term r = end;
    for (size_t k = n; k-- > 0;) {
      if (n > keep && k + 1 == n - keep) r = approx(Weight(), r);
      r = rebuild_unary(*ds[k], r);
    }
    return nf(r);
  }

  int d_;
};

}  // namespace

Term collapse_depth(int d, const Term& t) { return DepthCollapser(d).run(t); }

}  // namespace totality::core
