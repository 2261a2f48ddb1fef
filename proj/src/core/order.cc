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

#include "core/order.h"

#include <vector>

#include "core/normalize.h"

namespace totality::core {

namespace {

bool same_head(const Term& s, const Term& t) {
  return s->kind == t->kind && s->name == t->name &&
         s->priority == t->priority && s->index == t->index &&
         s->fields == t->fields && s->kids.size() == t->kids.size();
}

bool structural(Kind k) {
  return k != Kind::kDaimon && k != Kind::kApprox && k != Kind::kSum;
}

// Every subterm reachable from t through destructors and, when
// `through_functions` is set, through function arguments.
void suffixes(const Term& t, bool through_functions, std::vector<Term>& out) {
  out.push_back(t);
  if (is_destructor(t)) {
    suffixes(t->kid(), through_functions, out);
  } else if (through_functions && t->kind == Kind::kFunApp) {
    for (const auto& a : t->kids) {
      for (const auto& s : summands(a)) suffixes(s, true, out);
    }
  }
}

bool leq1(const Term& s, const Term& t);

bool kids_leq(const Term& s, const Term& t) {
  for (size_t i = 0; i < s->kids.size(); ++i) {
    if (!sleq(s->kids[i], t->kids[i])) return false;
  }
  return true;
}

bool approx_leq(const Term& s, const Term& t) {
  // t = <W> d1 .. dk t0 for every split point k.
  std::vector<const Node*> ds;
  Term cur = t->kid();
  while (true) {
    if (sleq(s->kid(), cur)) {
      Term r = approx(Weight(), cur);
      for (size_t k = ds.size(); k-- > 0;) r = rebuild_unary(*ds[k], r);
      r = nf(approx(t->weight, r));
      if (r->kind == Kind::kApprox && equal(r->kid(), cur) &&
          coef_leq(s->weight, r->weight)) {
        return true;
      }
    }
    if (!is_destructor(cur)) return false;
    ds.push_back(cur.get());
    cur = cur->kid();
  }
}

bool leq1(const Term& s, const Term& t) {
  if (structural(s->kind)) {
    return same_head(s, t) && kids_leq(s, t);
  }
  if (s->kind == Kind::kDaimon) {
    if (t->kind == Kind::kDaimon) {
      std::vector<Term> cands;
      suffixes(t->kid(), true, cands);
      for (const auto& c : cands) {
        if (sleq(s->kid(), c)) return true;
      }
      return false;
    }
    return sleq(s, nf(daimon(t)));
  }
  // s is an approximation.
  if (t->kind == Kind::kApprox) return approx_leq(s, t);
  Term u = nf(approx(Weight(), t));
  if (equal(u, t)) return false;
  return sleq(s, u);
}

bool coh1(const Term& u, const Term& v);

bool coh_any(const Term& u, const Term& v) {
  for (const auto& a : summands(u)) {
    for (const auto& b : summands(v)) {
      if (coh1(a, b)) return true;
    }
  }
  return false;
}

bool coh1(const Term& u, const Term& v) {
  if (u->kind == Kind::kDaimon && v->kind == Kind::kDaimon) {
    std::vector<Term> us;
    suffixes(u->kid(), false, us);
    for (const auto& a : us) {
      if (coh_any(a, v->kid())) return true;
    }
    std::vector<Term> vs;
    suffixes(v->kid(), false, vs);
    for (const auto& b : vs) {
      if (coh_any(u->kid(), b)) return true;
    }
    return false;
  }
  if (!structural(u->kind) || !structural(v->kind)) {
    return coh_any(nf(daimon(u)), nf(daimon(v)));
  }
  if (!same_head(u, v)) return false;
  for (size_t i = 0; i < u->kids.size(); ++i) {
    if (!coh_any(u->kids[i], v->kids[i])) return false;
  }
  return true;
}

}  // namespace

bool sleq(const Term& s, const Term& t) {
  const auto ss = summands(s);
  for (const auto& b : summands(t)) {
    bool found = false;
    for (const auto& a : ss) {
      if (leq1(a, b)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool sqcoh(const Term& u, const Term& v) { return coh_any(u, v); }

}  // namespace totality::core
