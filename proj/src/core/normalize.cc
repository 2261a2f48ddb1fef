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

#include "core/normalize.h"

namespace totality::core {

namespace {

constexpr long kFuel = 50'000'000;
thread_local long fuel = kFuel;

void burn() {
  if (--fuel < 0) {
    fuel = kFuel;
    throw InternalError("normalization fuel exhausted");
  }
}

template <typename F>
Term each(const Term& t, F f) {
  if (t->kind != Kind::kSum) return f(t);
  std::vector<Term> out;
  for (const auto& s : t->kids) out.push_back(f(s));
  return sum(std::move(out));
}

// A destructor at priority p directly above an approximation.
Term absorb_destructor(int p, const Term& s) {
  const int sign = s->kid()->has_fun ? +1 : -1;
  return approx(s->weight + Weight::unit(p, sign), s->kid());
}

}  // namespace

Term nf_constr(const std::string& name, int priority, const Term& t) {
  burn();
  return constr(name, priority, t);
}

Term nf_constr_dual(const std::string& name, int priority, const Term& t) {
  burn();
  return each(t, [&](const Term& s) -> Term {
    switch (s->kind) {
      case Kind::kConstr:
        return s->name == name ? s->kid() : zero();
      case Kind::kRecord:
        return zero();
      case Kind::kDaimon:
        return s;
      case Kind::kApprox:
        return absorb_destructor(priority, s);
      default:
        return constr_dual(name, priority, s);
    }
  });
}

Term nf_project(const std::string& name, int priority, const Term& t) {
  burn();
  return each(t, [&](const Term& s) -> Term {
    switch (s->kind) {
      case Kind::kConstr:
        return zero();
      case Kind::kRecord:
        for (size_t i = 0; i < s->fields.size(); ++i) {
          if (s->fields[i] == name) return s->kids[i];
        }
        return zero();
      case Kind::kDaimon:
        return s;
      case Kind::kApprox:
        return absorb_destructor(priority, s);
      default:
        return project(name, priority, s);
    }
  });
}

Term nf_record(int priority, std::vector<std::pair<std::string, Term>> fields) {
  burn();
  for (const auto& f : fields) {
    if (is_zero(f.second)) return zero();
  }
  return record(priority, std::move(fields));
}

Term nf_funapp(const std::string& name, std::vector<Term> args) {
  burn();
  return funapp(name, std::move(args));
}

Term nf_daimon(const Term& t) {
  burn();
  return each(t, [&](const Term& s) -> Term {
    switch (s->kind) {
      case Kind::kConstr:
      case Kind::kApprox:
        return nf_daimon(s->kid());
      case Kind::kRecord: {
        std::vector<Term> out;
        for (const auto& k : s->kids) out.push_back(nf_daimon(k));
        return sum(std::move(out));
      }
      case Kind::kDaimon:
        return s;
      default:
        return daimon(s);
    }
  });
}

Term nf_approx(const Weight& w, const Term& t) {
  burn();
  return each(t, [&](const Term& s) -> Term {
    const bool dual = s->has_fun;
    switch (s->kind) {
      case Kind::kConstr:
        return nf_approx(w + Weight::unit(s->priority, dual ? -1 : +1),
                         s->kid());
      case Kind::kRecord:
        if (dual && s->kids.size() == 1) {
          return nf_approx(w + Weight::unit(s->priority, -1), s->kid());
        } else {
          std::vector<Term> out;
          for (const auto& k : s->kids) out.push_back(nf_daimon(k));
          return sum(std::move(out));
        }
      case Kind::kApprox:
        return approx(w + s->weight, s->kid());
      case Kind::kDaimon:
        return s;
      default:
        return approx(w, s);
    }
  });
}

namespace {

Term nf_rec(const Term& t) {
  burn();
  switch (t->kind) {
    case Kind::kParam:
      return t;
    case Kind::kConstr:
      return nf_constr(t->name, t->priority, nf_rec(t->kid()));
    case Kind::kConstrDual:
      return nf_constr_dual(t->name, t->priority, nf_rec(t->kid()));
    case Kind::kProject:
      return nf_project(t->name, t->priority, nf_rec(t->kid()));
    case Kind::kRecord: {
      std::vector<std::pair<std::string, Term>> fields;
      for (size_t i = 0; i < t->kids.size(); ++i) {
        fields.emplace_back(t->fields[i], nf_rec(t->kids[i]));
      }
      return nf_record(t->priority, std::move(fields));
    }
    case Kind::kFunApp: {
      std::vector<Term> args;
      for (const auto& a : t->kids) args.push_back(nf_rec(a));
      return nf_funapp(t->name, std::move(args));
    }
    case Kind::kDaimon:
      return nf_daimon(nf_rec(t->kid()));
    case Kind::kApprox:
      return nf_approx(t->weight, nf_rec(t->kid()));
    case Kind::kSum: {
      std::vector<Term> out;
      for (const auto& s : t->kids) out.push_back(nf_rec(s));
      return sum(std::move(out));
    }
  }
  throw InternalError("unreachable term kind");
}

bool is_delta(const Term& t) {
  switch (t->kind) {
    case Kind::kParam:
      return true;
    case Kind::kConstrDual:
    case Kind::kProject:
      return is_delta(t->kid());
    case Kind::kFunApp:
      for (const auto& a : t->kids) {
        if (!is_normal_form(a)) return false;
      }
      return true;
    default:
      return false;
  }
}

bool is_simple_nf(const Term& t) {
  switch (t->kind) {
    case Kind::kConstr:
      return is_simple_nf(t->kid());
    case Kind::kRecord:
      for (const auto& k : t->kids) {
        if (!is_simple_nf(k)) return false;
      }
      return true;
    case Kind::kDaimon:
    case Kind::kApprox:
      return is_delta(t->kid());
    default:
      return is_delta(t);
  }
}

}  // namespace

Term nf(const Term& t) {
  fuel = kFuel;
  return nf_rec(t);
}

bool is_normal_form(const Term& t) {
  for (const auto& s : summands(t)) {
    if (!is_simple_nf(s)) return false;
  }
  return true;
}

}  // namespace totality::core
