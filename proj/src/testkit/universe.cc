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

// The order is the least contextual preorder containing its generators. On a
// finite universe it is reachability in the graph of single generator steps
// applied at any position, which is what is computed here. Derivations that
// leave the universe are lost, so a negative answer is inconclusive.

#include <algorithm>
#include <functional>
#include <utility>

#include "core/compose.h"
#include "core/normalize.h"
#include "testkit/testkit.h"

namespace totality::testkit {

using core::Kind;
using core::Weight;
using core::ZInf;

namespace {

constexpr int kHole = 1000;
const char* const kCtorNames[] = {"A", "B"};
const char* const kFieldNames[] = {"D", "E"};

using Emit = std::function<void(const Term&)>;

std::vector<Weight> default_weights() {
  std::vector<Weight> ws = {Weight()};
  for (int p = 0; p <= 1; ++p) {
    for (int v : {-2, -1, 1, 2}) ws.push_back(Weight::unit(p, v));
    ws.push_back(Weight::unit(p, ZInf::inf()));
  }
  return ws;
}

Term with_kid(const Term& t, size_t i, const Term& k) {
  switch (t->kind) {
    case Kind::kRecord: {
      std::vector<std::pair<std::string, Term>> fs;
      for (size_t j = 0; j < t->kids.size(); ++j) {
        fs.emplace_back(t->fields[j], j == i ? k : t->kids[j]);
      }
      return core::record(t->priority, std::move(fs));
    }
    case Kind::kFunApp: {
      std::vector<Term> args = t->kids;
      args[i] = k;
      return core::funapp(t->name, std::move(args));
    }
    default:
      return core::rebuild_unary(*t, k);
  }
}

// Every (context, subterm) decomposition of a non-sum term.
void positions(const Term& t, std::vector<std::pair<Term, Term>>& out) {
  out.emplace_back(core::param(kHole), t);
  for (size_t i = 0; i < t->kids.size(); ++i) {
    std::vector<std::pair<Term, Term>> inner;
    positions(t->kids[i], inner);
    for (auto& [ctx, sub] : inner) out.emplace_back(with_kid(t, i, ctx), sub);
  }
}

Term plug(const Term& ctx, const Term& t) {
  return core::substitute(ctx, {{kHole, t}});
}

bool finite(const Weight& w) {
  for (const auto& [p, v] : w.components()) {
    if (v.is_inf()) return false;
  }
  return true;
}

class Steps {
 public:
  Steps(const UniverseConfig& c) : c_(c) {}

  // Single steps u -> u' with u <= u', at the root of a non-sum term.
  void root(const Term& u, const Emit& emit) const {
    const Term x = core::param(1);
    const int cp = c_.constructor_priority;
    const int fp = c_.field_priority;
    // Reverse of C-C t ~ t, and of D{...; D = t; ...} >= t.
    for (const char* c : kCtorNames) {
      emit(core::constr_dual(c, cp, core::constr(c, cp, u)));
    }
    for (const char* f : kFieldNames) {
      emit(core::project(f, fp, core::record(fp, {{f, u}})));
    }
    emit(core::project("D", fp, core::record(fp, {{"D", u}, {"E", x}})));
    emit(core::project("E", fp, core::record(fp, {{"D", x}, {"E", u}})));

    switch (u->kind) {
      case Kind::kParam:
        break;
      case Kind::kDaimon: {
        const Term& v = u->kid();
        if (v->kind == Kind::kParam) {
          emit(v);
          emit(core::funapp("f", {v}));
        }
        emit(core::daimon(u));
        for (const char* c : kCtorNames) {
          emit(core::daimon(core::constr(c, cp, v)));
          emit(core::constr_dual(c, cp, u));
        }
        for (const char* f : kFieldNames) {
          emit(core::project(f, fp, u));
          const Term r = core::record(fp, {{f, v}});
          emit(core::daimon(r));
          for (const auto& w : c_.weights) emit(core::approx(w, r));
        }
        for (const auto& w : c_.weights) emit(core::daimon(core::approx(w, v)));
        switch (v->kind) {
          case Kind::kDaimon:
            emit(v);
            break;
          case Kind::kConstr:
            emit(core::daimon(v->kid()));
            break;
          case Kind::kApprox:
            emit(core::approx(v->weight, core::daimon(v->kid())));
            break;
          default:
            break;
        }
        break;
      }
      case Kind::kConstrDual: {
        const Term& v = u->kid();
        if (v->kind == Kind::kConstr && v->name == u->name && v->priority == u->priority) {
          emit(v->kid());
        }
        if (v->kind == Kind::kDaimon) emit(v);
        if (v->kind == Kind::kApprox) {
          emit(core::approx(v->weight + Weight::unit(u->priority, -1), v->kid()));
        }
        break;
      }
      case Kind::kProject:
        if (u->kid()->kind == Kind::kDaimon) emit(u->kid());
        break;
      case Kind::kApprox: {
        const Weight& w = u->weight;
        const Term& v = u->kid();
        if (w.is_zero()) emit(v);
        for (const auto& w2 : c_.weights) {
          if (w2 != w && core::coef_leq(w, w2)) emit(core::approx(w2, v));
          if (finite(w2)) {
            emit(core::approx(w2, core::approx(w + w2.negated(), v)));
          }
        }
        if (v->kind == Kind::kConstr) {
          emit(core::approx(w + Weight::unit(v->priority, 1), v->kid()));
        }
        for (const char* c : kCtorNames) {
          emit(core::approx(w + Weight::unit(cp, -1), core::constr(c, cp, v)));
          emit(core::constr_dual(c, cp, core::approx(w + Weight::unit(cp, 1), v)));
        }
        for (const char* f : kFieldNames) {
          emit(core::project(f, fp, core::approx(w + Weight::unit(fp, 1), v)));
        }
        break;
      }
      default:
        break;
    }
  }

  // Single steps of a whole term, sum included.
  void all(const Term& t, const Emit& emit) const {
    const auto parts = core::summands(t);
    auto replace = [&](size_t i, size_t j, const Term& r) {
      std::vector<Term> out;
      for (size_t k = 0; k < parts.size(); ++k) {
        if (k != i && k != j) out.push_back(parts[k]);
      }
      out.push_back(r);
      emit(core::sum(std::move(out)));
    };
    const size_t none = parts.size();
    std::vector<std::vector<std::pair<Term, Term>>> pos(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
      positions(parts[i], pos[i]);
      if (parts.size() > 1) {
        std::vector<Term> rest;
        for (size_t k = 0; k < parts.size(); ++k) {
          if (k != i) rest.push_back(parts[k]);
        }
        emit(core::sum(std::move(rest)));
      }
      for (const auto& [ctx, sub] : pos[i]) {
        root(sub, [&](const Term& r) { replace(i, none, plug(ctx, r)); });
      }
    }
    // Two daimons in a common context merge under one record.
    const int fp = c_.field_priority;
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t j = i + 1; j < parts.size(); ++j) {
        for (const auto& [ci, si] : pos[i]) {
          if (si->kind != Kind::kDaimon) continue;
          for (const auto& [cj, sj] : pos[j]) {
            if (sj->kind != Kind::kDaimon || !core::equal(ci, cj)) continue;
            for (int flip = 0; flip < 2; ++flip) {
              const Term& a = flip ? sj->kid() : si->kid();
              const Term& b = flip ? si->kid() : sj->kid();
              const Term r = core::record(fp, {{"D", a}, {"E", b}});
              replace(i, j, plug(ci, core::daimon(r)));
              for (const auto& w : c_.weights) replace(i, j, plug(ci, core::approx(w, r)));
            }
          }
        }
      }
    }
  }

 private:
  const UniverseConfig& c_;
};

}  // namespace

TermUniverse::TermUniverse(UniverseConfig config) : config_(std::move(config)) {
  if (config_.weights.empty()) config_.weights = default_weights();
  enumerate();
  build_edges();
  close();
}

void TermUniverse::enumerate() {
  const int n = config_.max_nodes;
  const int cp = config_.constructor_priority;
  const int fp = config_.field_priority;
  auto add = [&](const Term& t) {
    if (index_.emplace(t, static_cast<int>(terms_.size())).second) {
      terms_.push_back(t);
      if (terms_.size() > config_.max_terms) {
        throw core::InternalError("term universe too large");
      }
    }
  };
  // Non-sum terms by size.
  std::vector<std::vector<Term>> atoms(n + 1);
  atoms[1].push_back(core::param(1));
  for (int s = 2; s <= n; ++s) {
    for (const auto& a : atoms[s - 1]) {
      for (const char* c : kCtorNames) {
        atoms[s].push_back(core::constr(c, cp, a));
        atoms[s].push_back(core::constr_dual(c, cp, a));
      }
      for (const char* f : kFieldNames) {
        atoms[s].push_back(core::project(f, fp, a));
        atoms[s].push_back(core::record(fp, {{f, a}}));
      }
      atoms[s].push_back(core::funapp("f", {a}));
      atoms[s].push_back(core::daimon(a));
      for (const auto& w : config_.weights) atoms[s].push_back(core::approx(w, a));
    }
    for (int i = 1; i + 1 < s; ++i) {
      for (const auto& a : atoms[i]) {
        for (const auto& b : atoms[s - 1 - i]) {
          atoms[s].push_back(core::record(fp, {{"D", a}, {"E", b}}));
        }
      }
    }
  }
  std::vector<Term> flat;
  for (int s = 1; s <= n; ++s) {
    for (const auto& a : atoms[s]) {
      add(a);
      flat.push_back(a);
    }
  }
  // Sums of distinct atoms.
  std::function<void(size_t, int, std::vector<Term>&)> sums =
      [&](size_t from, int budget, std::vector<Term>& acc) {
        if (acc.size() >= 2) add(core::sum(acc));
        for (size_t k = from; k < flat.size(); ++k) {
          if (flat[k]->size > budget) continue;
          acc.push_back(flat[k]);
          sums(k + 1, budget - flat[k]->size, acc);
          acc.pop_back();
        }
      };
  std::vector<Term> acc;
  sums(0, n, acc);
}

void TermUniverse::build_edges() {
  Steps steps(config_);
  succ_.assign(terms_.size(), {});
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    auto& out = succ_[i];
    steps.all(t, [&](const Term& r) {
      if (r->size > config_.max_nodes || core::is_zero(r)) return;
      auto it = index_.find(r);
      if (it != index_.end() && it->second != static_cast<int>(i)) {
        out.push_back(it->second);
      }
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    edges_ += out.size();
  }
}

void TermUniverse::close() {
  // Iterative Tarjan. Components come out sinks first, so every successor
  // component is finished before its predecessors.
  const int n = static_cast<int>(terms_.size());
  const size_t words = (terms_.size() + 63) / 64;
  std::vector<int> idx(n, -1), low(n, 0), stack;
  std::vector<bool> on(n, false);
  scc_.assign(n, -1);
  int counter = 0;
  struct Frame {
    int v;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < succ_[f.v].size()) {
        const int w = succ_[f.v][f.next++];
        if (idx[w] < 0) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          on[w] = true;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
        continue;
      }
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != idx[v]) continue;
      const int id = static_cast<int>(reach_.size());
      std::vector<uint64_t> bits(words, 0);
      std::vector<int> members;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        scc_[w] = id;
        members.push_back(w);
        bits[w / 64] |= uint64_t{1} << (w % 64);
      } while (w != v);
      for (int m : members) {
        for (int s : succ_[m]) {
          if (scc_[s] == id) continue;
          const auto& other = reach_[scc_[s]];
          for (size_t k = 0; k < words; ++k) bits[k] |= other[k];
        }
      }
      reach_.push_back(std::move(bits));
    }
  }
}

const std::vector<uint64_t>& TermUniverse::reach_of(int i) const {
  return reach_[scc_[i]];
}

std::vector<Term> TermUniverse::normal_forms(int max_nodes) const {
  std::vector<Term> out;
  std::function<bool(const Term&, bool)> no_approx_above_call =
      [&](const Term& t, bool under) -> bool {
    if (t->kind == Kind::kFunApp && under) return false;
    const bool u = under || t->kind == Kind::kApprox;
    for (const auto& k : t->kids) {
      if (!no_approx_above_call(k, u)) return false;
    }
    return true;
  };
  for (const auto& t : terms_) {
    if (t->size > max_nodes) continue;
    if (!core::is_normal_form(t) || !core::equal(core::nf(t), t)) continue;
    if (!no_approx_above_call(t, false)) continue;
    out.push_back(t);
  }
  return out;
}

TermUniverse::Answer TermUniverse::leq(const Term& s, const Term& t) const {
  if (core::is_zero(t)) return Answer::kLeq;
  auto a = index_.find(s);
  auto b = index_.find(t);
  if (a == index_.end() || b == index_.end()) return Answer::kOutside;
  const int j = b->second;
  const bool hit = (reach_of(a->second)[j / 64] >> (j % 64)) & 1;
  return hit ? Answer::kLeq : Answer::kNotFound;
}

std::vector<Term> TermUniverse::successors(const Term& s) const {
  std::vector<Term> out;
  auto it = index_.find(s);
  if (it == index_.end()) return out;
  for (int k : succ_[it->second]) out.push_back(terms_[k]);
  return out;
}

bool leq_oracle(const Term& s, const Term& t, const TermUniverse& u) {
  return u.leq(s, t) == TermUniverse::Answer::kLeq;
}

}  // namespace totality::testkit
