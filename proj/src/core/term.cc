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

#include "core/term.h"

#include <algorithm>

namespace totality::core {

namespace {

std::shared_ptr<Node> make(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

void finish(Node& n) {
  n.size = 1;
  n.has_fun = n.kind == Kind::kFunApp;
  for (const auto& k : n.kids) {
    n.size += k->size;
    n.has_fun = n.has_fun || k->has_fun;
  }
}

// Applies `build` to every simple choice of summands, one per argument.
template <typename F>
Term distribute(const std::vector<Term>& args, F build) {
  std::vector<std::vector<Term>> choices;
  bool any_sum = false;
  for (const auto& a : args) {
    choices.push_back(summands(a));
    if (a->kind == Kind::kSum) any_sum = true;
  }
  if (!any_sum) return build(args);
  std::vector<Term> out;
  std::vector<size_t> idx(args.size(), 0);
  for (const auto& c : choices) {
    if (c.empty()) return zero();
  }
  while (true) {
    std::vector<Term> pick;
    pick.reserve(args.size());
    for (size_t i = 0; i < args.size(); ++i) pick.push_back(choices[i][idx[i]]);
    out.push_back(build(pick));
    size_t i = 0;
    for (; i < args.size(); ++i) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == args.size()) break;
  }
  return sum(std::move(out));
}

Term unary(Kind k, const std::string& name, int priority, const Weight& w,
           const Term& t) {
  return distribute({t}, [&](const std::vector<Term>& a) -> Term {
    auto n = make(k);
    n->name = name;
    n->priority = priority;
    n->weight = w;
    n->kids = a;
    finish(*n);
    return n;
  });
}

}  // namespace

std::vector<Term> summands(const Term& t) {
  if (t->kind == Kind::kSum) return t->kids;
  return {t};
}

Term param(int index) {
  auto n = make(Kind::kParam);
  n->index = index;
  finish(*n);
  return n;
}

Term constr(const std::string& name, int priority, const Term& t) {
  return unary(Kind::kConstr, name, priority, {}, t);
}

Term constr_dual(const std::string& name, int priority, const Term& t) {
  return unary(Kind::kConstrDual, name, priority, {}, t);
}

Term project(const std::string& name, int priority, const Term& t) {
  return unary(Kind::kProject, name, priority, {}, t);
}

Term daimon(const Term& t) { return unary(Kind::kDaimon, "", 0, {}, t); }

Term approx(const Weight& w, const Term& t) {
  return unary(Kind::kApprox, "", 0, w, t);
}

Term record(int priority, std::vector<std::pair<std::string, Term>> fields) {
  if (fields.empty()) throw InternalError("record with no fields");
  std::sort(fields.begin(), fields.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].first == fields[i - 1].first) {
      throw InternalError("duplicate record field " + fields[i].first);
    }
  }
  std::vector<std::string> names;
  std::vector<Term> args;
  for (auto& [f, t] : fields) {
    names.push_back(f);
    args.push_back(t);
  }
  return distribute(args, [&](const std::vector<Term>& a) -> Term {
    auto n = make(Kind::kRecord);
    n->priority = priority;
    n->fields = names;
    n->kids = a;
    finish(*n);
    return n;
  });
}

Term funapp(const std::string& name, std::vector<Term> args) {
  return distribute(args, [&](const std::vector<Term>& a) -> Term {
    auto n = make(Kind::kFunApp);
    n->name = name;
    n->kids = a;
    finish(*n);
    return n;
  });
}

Term sum(std::vector<Term> terms) {
  std::vector<Term> flat;
  for (auto& t : terms) {
    if (t->kind == Kind::kSum) {
      flat.insert(flat.end(), t->kids.begin(), t->kids.end());
    } else {
      flat.push_back(std::move(t));
    }
  }
  std::sort(flat.begin(), flat.end(), TermLess());
  flat.erase(std::unique(flat.begin(), flat.end(), equal), flat.end());
  if (flat.size() == 1) return flat.front();
  auto n = make(Kind::kSum);
  n->kids = std::move(flat);
  finish(*n);
  n->size -= 1;
  return n;
}

Term zero() {
  static const Term z = [] {
    auto n = make(Kind::kSum);
    n->size = 0;
    return Term(n);
  }();
  return z;
}

int compare(const Term& a, const Term& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->priority != b->priority) return a->priority < b->priority ? -1 : 1;
  if (a->index != b->index) return a->index < b->index ? -1 : 1;
  if (int c = a->weight.compare(b->weight)) return c;
  if (a->fields != b->fields) return a->fields < b->fields ? -1 : 1;
  if (a->kids.size() != b->kids.size()) {
    return a->kids.size() < b->kids.size() ? -1 : 1;
  }
  for (size_t i = 0; i < a->kids.size(); ++i) {
    if (int c = compare(a->kids[i], b->kids[i])) return c;
  }
  return 0;
}

Term rebuild_unary(const Node& like, const Term& t) {
  switch (like.kind) {
    case Kind::kConstr:
      return constr(like.name, like.priority, t);
    case Kind::kConstrDual:
      return constr_dual(like.name, like.priority, t);
    case Kind::kProject:
      return project(like.name, like.priority, t);
    case Kind::kDaimon:
      return daimon(t);
    case Kind::kApprox:
      return approx(like.weight, t);
    default:
      throw InternalError("rebuild_unary on a non-unary node");
  }
}

int count_funapps(const Term& t) {
  int n = t->kind == Kind::kFunApp ? 1 : 0;
  for (const auto& k : t->kids) n += count_funapps(k);
  return n;
}

}  // namespace totality::core
