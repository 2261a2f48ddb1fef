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

#include "typing/infer.h"

#include <algorithm>

#include "surface/desugar.h"

namespace totality::typing {

using surface::Expr;
using surface::Pattern;
using surface::Pos;
using surface::TypeExpr;

Declarations::Declarations(const surface::Program& p) {
  add("unit", {}, true);
  add("prod", {"'a", "'b"}, true);
  TypePtr prod = con("prod", {var("'a"), var("'b")});
  dtors_["Fst"] = {"prod", prod, var("'a")};
  dtors_["Snd"] = {"prod", prod, var("'b")};
  items_of_["prod"] = {"Fst", "Snd"};

  for (const auto& d : p.types) {
    if (arity_.count(d.name)) throw TypeError(d.pos, "type '" + d.name + "' redefined");
    add(d.name, d.params, d.codata);
  }
  for (const auto& d : p.types) {
    std::vector<TypePtr> ps;
    for (const auto& v : d.params) ps.push_back(var(v));
    TypePtr owner = con(d.name, ps);
    for (const auto& it : d.items) {
      std::vector<const TypeExpr*> doms;
      const TypeExpr* res = &it.type;
      while (res->kind == TypeExpr::Kind::kArrow) {
        doms.push_back(&res->args[0]);
        res = &res->args[1];
      }
      if (ctors_.count(it.name) || dtors_.count(it.name)) {
        throw TypeError(it.pos, "'" + it.name + "' declared twice");
      }
      if (d.codata) {
        if (doms.size() != 1 || !same(convert(*doms[0], it.pos), owner)) {
          throw TypeError(it.pos, "destructor '" + it.name + "' must have type " +
                                      to_string(owner) + " -> T");
        }
        dtors_[it.name] = {d.name, owner, convert(*res, it.pos)};
      } else {
        if (!same(convert(*res, it.pos), owner)) {
          throw TypeError(it.pos, "constructor '" + it.name + "' must return " +
                                      to_string(owner));
        }
        TypePtr arg;
        if (doms.empty()) {
          arg = con("unit");
        } else if (doms.size() == 1) {
          arg = convert(*doms[0], it.pos);
        } else if (doms.size() == 2) {
          arg = con("prod", {convert(*doms[0], it.pos), convert(*doms[1], it.pos)});
        } else {
          throw TypeError(it.pos, "constructor '" + it.name +
                                      "' has more than two arguments");
        }
        ctors_[it.name] = {d.name, owner, arg};
      }
      items_of_[d.name].push_back(it.name);
    }
  }
}

void Declarations::add(const std::string& name,
                       const std::vector<std::string>& params, bool codata) {
  arity_[name] = static_cast<int>(params.size());
  params_[name] = params;
  if (codata) codata_.insert(name);
  items_of_[name];
}

TypePtr Declarations::convert(const TypeExpr& t, Pos pos) const {
  switch (t.kind) {
    case TypeExpr::Kind::kVar:
      return var(t.name);
    case TypeExpr::Kind::kArrow:
      throw TypeError(pos, "function types are not allowed here");
    case TypeExpr::Kind::kApp: {
      auto it = arity_.find(t.name);
      if (it == arity_.end()) throw TypeError(pos, "unknown type '" + t.name + "'");
      if (it->second != static_cast<int>(t.args.size())) {
        throw TypeError(pos, "type '" + t.name + "' expects " +
                                 std::to_string(it->second) + " arguments");
      }
      std::vector<TypePtr> args;
      for (const auto& a : t.args) args.push_back(convert(a, pos));
      return con(t.name, std::move(args));
    }
  }
  return nullptr;
}

const ItemSig* Declarations::ctor(const std::string& name) const {
  auto it = ctors_.find(name);
  return it == ctors_.end() ? nullptr : &it->second;
}

const ItemSig* Declarations::dtor(const std::string& name) const {
  auto it = dtors_.find(name);
  return it == dtors_.end() ? nullptr : &it->second;
}

std::vector<std::string> Declarations::records_with(
    const std::set<std::string>& fields, bool subset) const {
  std::vector<std::string> out;
  for (const auto& name : codata_) {
    const auto& items = items_of_.at(name);
    std::set<std::string> have(items.begin(), items.end());
    bool ok = subset ? std::includes(have.begin(), have.end(), fields.begin(),
                                     fields.end())
                     : have == fields;
    if (ok && !fields.empty()) out.push_back(name);
  }
  return out;
}

std::vector<TypePtr> Declarations::deconstruct(const TypePtr& inst) const {
  std::vector<TypePtr> out;
  auto it = items_of_.find(inst->name);
  if (it == items_of_.end() || is_opaque(inst)) return out;
  Subst s;
  const auto& ps = params_.at(inst->name);
  for (size_t i = 0; i < ps.size() && i < inst->args.size(); ++i) {
    s.bind(ps[i], inst->args[i]);
  }
  for (const auto& item : it->second) {
    const ItemSig* sig = codata_.count(inst->name) ? dtor(item) : ctor(item);
    out.push_back(s.apply(sig->other));
  }
  return out;
}

std::string to_string(const FunSig& s) {
  std::string out;
  for (const auto& p : s.params) out += to_string(p) + " -> ";
  return out + to_string(s.result);
}

namespace {

class Inferer {
 public:
  Inferer(const Declarations& d, std::map<std::string, FunSig>& env)
      : d_(d), env_(env) {}

  GroupTyping run(surface::Group& g) {
    for (const auto& def : g.defs) {
      mono_[def.name] = def.type ? signature(*def.type, def.arity(), def.pos)
                                 : fresh_sig(def.arity());
    }
    for (auto& def : g.defs) {
      const FunSig& sig = mono_.at(def.name);
      for (auto& c : def.clauses) {
        std::map<std::string, TypePtr> vars;
        for (size_t i = 0; i < c.patterns.size(); ++i) {
          pattern(c.patterns[i], sig.params[i], vars);
        }
        expr(c.body, sig.result, vars);
      }
    }
    GroupTyping out;
    for (const auto& t : table_) out.table.push_back(rigidify(s_.apply(t)));
    for (const auto& def : g.defs) {
      const FunSig& m = mono_.at(def.name);
      FunSig gen;
      for (const auto& p : m.params) gen.params.push_back(generalize(s_.apply(p)));
      gen.result = generalize(s_.apply(m.result));
      out.sigs[def.name] = gen;
      env_[def.name] = gen;
    }
    return out;
  }

 private:
  TypePtr fresh() { return var("?" + std::to_string(next_++)); }

  FunSig fresh_sig(int arity) {
    FunSig s;
    for (int i = 0; i < arity; ++i) s.params.push_back(fresh());
    s.result = fresh();
    return s;
  }

  // Signature type variables are rigid inside their own group.
  TypePtr rigid(const TypeExpr& t, Pos pos) {
    switch (t.kind) {
      case TypeExpr::Kind::kVar:
        return con(t.name);
      case TypeExpr::Kind::kArrow:
        throw TypeError(pos, "higher-order argument types are not supported");
      case TypeExpr::Kind::kApp: {
        if (!d_.is_type(t.name)) {
          if (t.args.empty()) return con("'" + t.name);
          throw TypeError(pos, "unknown type '" + t.name + "'");
        }
        if (d_.type_arity(t.name) != static_cast<int>(t.args.size())) {
          throw TypeError(pos, "type '" + t.name + "' expects " +
                                   std::to_string(d_.type_arity(t.name)) +
                                   " arguments");
        }
        std::vector<TypePtr> args;
        for (const auto& a : t.args) args.push_back(rigid(a, pos));
        return con(t.name, std::move(args));
      }
    }
    return nullptr;
  }

  FunSig signature(const TypeExpr& t, int arity, Pos pos) {
    FunSig s;
    const TypeExpr* cur = &t;
    for (int i = 0; i < arity; ++i) {
      if (cur->kind != TypeExpr::Kind::kArrow) {
        throw TypeError(pos, "signature has fewer than " + std::to_string(arity) +
                                 " arguments");
      }
      s.params.push_back(rigid(cur->args[0], pos));
      cur = &cur->args[1];
    }
    s.result = rigid(*cur, pos);
    return s;
  }

  static TypePtr rigidify(const TypePtr& t) {
    if (t->is_var) return con("'" + t->name);
    std::vector<TypePtr> args;
    for (const auto& a : t->args) args.push_back(rigidify(a));
    return con(t->name, std::move(args));
  }

  static TypePtr generalize(const TypePtr& t) {
    if (t->is_var) return var("'" + t->name);
    if (is_rigid(t)) return var(t->name);
    std::vector<TypePtr> args;
    for (const auto& a : t->args) args.push_back(generalize(a));
    return con(t->name, std::move(args));
  }

  // Replaces the quantified variables of a generalized type with metas.
  TypePtr instantiate(const TypePtr& t, std::map<std::string, TypePtr>& m) {
    if (t->is_var) {
      auto it = m.find(t->name);
      if (it == m.end()) it = m.emplace(t->name, fresh()).first;
      return it->second;
    }
    std::vector<TypePtr> args;
    for (const auto& a : t->args) args.push_back(instantiate(a, m));
    return con(t->name, std::move(args));
  }

  void unify_at(Pos pos, const TypePtr& want, const TypePtr& got) {
    if (auto err = unify(want, got, s_)) {
      throw TypeError(pos, "type mismatch: expected " + to_string(s_.apply(want)) +
                               ", found " + to_string(s_.apply(got)) + " (" +
                               *err + ")");
    }
  }

  int note(const TypePtr& t) {
    table_.push_back(t);
    return static_cast<int>(table_.size()) - 1;
  }

  // Instantiates an item signature; returns {owner, other}.
  std::pair<TypePtr, TypePtr> item(const ItemSig& sig) {
    std::map<std::string, TypePtr> m;
    TypePtr owner = instantiate(sig.owner_type, m);
    TypePtr other = instantiate(sig.other, m);
    return {owner, other};
  }

  std::string record_type(const std::vector<std::string>& fields, bool subset,
                          Pos pos) {
    std::set<std::string> fs(fields.begin(), fields.end());
    auto cands = d_.records_with(fs, subset);
    std::string shown;
    for (const auto& f : fields) shown += (shown.empty() ? "" : "; ") + f;
    if (cands.empty()) {
      throw TypeError(pos, "no codata type has the fields {" + shown + "}");
    }
    if (cands.size() > 1) {
      throw TypeError(pos, "ambiguous record {" + shown + "}");
    }
    return cands.front();
  }

  void pattern(Pattern& p, const TypePtr& want,
               std::map<std::string, TypePtr>& vars) {
    switch (p.kind) {
      case Pattern::Kind::kVar:
        vars[p.name] = want;
        return;
      case Pattern::Kind::kCtor: {
        const ItemSig* sig = d_.ctor(p.name);
        if (!sig) throw TypeError(p.pos, "unknown constructor '" + p.name + "'");
        auto [owner, arg] = item(*sig);
        unify_at(p.pos, want, owner);
        p.ann.type_id = note(owner);
        pattern(p.args.at(0), arg, vars);
        return;
      }
      case Pattern::Kind::kRecord: {
        std::string name = record_type(p.fields, true, p.pos);
        TypePtr owner;
        for (size_t i = 0; i < p.fields.size(); ++i) {
          auto [o, res] = item(*d_.dtor(p.fields[i]));
          if (owner) {
            unify_at(p.pos, owner, o);
          } else {
            owner = o;
          }
          pattern(p.args[i], res, vars);
        }
        unify_at(p.pos, want, owner);
        p.ann.type_id = note(owner);
        return;
      }
      default:
        throw TypeError(p.pos, "pattern not desugared");
    }
  }

  void expr(Expr& e, const TypePtr& want, std::map<std::string, TypePtr>& vars) {
    switch (e.kind) {
      case Expr::Kind::kVar:
        unify_at(e.pos, want, vars.at(e.name));
        return;
      case Expr::Kind::kCall: {
        FunSig sig;
        if (auto it = mono_.find(e.name); it != mono_.end()) {
          sig = it->second;
        } else if (auto it = env_.find(e.name); it != env_.end()) {
          std::map<std::string, TypePtr> m;
          for (const auto& p : it->second.params) sig.params.push_back(instantiate(p, m));
          sig.result = instantiate(it->second.result, m);
        } else if (e.name == surface::kEmptyRecord) {
          for (size_t i = 0; i < e.args.size(); ++i) sig.params.push_back(fresh());
          sig.result = con("unit");
        } else {
          throw TypeError(e.pos, "unbound function '" + e.name + "'");
        }
        if (sig.params.size() != e.args.size()) {
          throw TypeError(e.pos, "wrong number of arguments to '" + e.name + "'");
        }
        for (size_t i = 0; i < e.args.size(); ++i) expr(e.args[i], sig.params[i], vars);
        unify_at(e.pos, want, sig.result);
        return;
      }
      case Expr::Kind::kCtor: {
        const ItemSig* sig = d_.ctor(e.name);
        if (!sig) throw TypeError(e.pos, "unknown constructor '" + e.name + "'");
        auto [owner, arg] = item(*sig);
        unify_at(e.pos, want, owner);
        e.ann.type_id = note(owner);
        expr(e.args.at(0), arg, vars);
        return;
      }
      case Expr::Kind::kRecord: {
        std::string name = record_type(e.fields, false, e.pos);
        TypePtr owner;
        for (size_t i = 0; i < e.fields.size(); ++i) {
          auto [o, res] = item(*d_.dtor(e.fields[i]));
          if (owner) {
            unify_at(e.pos, owner, o);
          } else {
            owner = o;
          }
          expr(e.args[i], res, vars);
        }
        unify_at(e.pos, want, owner);
        e.ann.type_id = note(owner);
        return;
      }
      case Expr::Kind::kProj: {
        const ItemSig* sig = d_.dtor(e.name);
        if (!sig) throw TypeError(e.pos, "unknown destructor '" + e.name + "'");
        auto [owner, res] = item(*sig);
        e.ann.type_id = note(owner);
        expr(e.args.at(0), owner, vars);
        unify_at(e.pos, want, res);
        return;
      }
      default:
        throw TypeError(e.pos, "expression not validated");
    }
  }

  const Declarations& d_;
  std::map<std::string, FunSig>& env_;
  std::map<std::string, FunSig> mono_;
  Subst s_;
  int next_ = 0;
  std::vector<TypePtr> table_;
};

}  // namespace

GroupTyping annotate_group(surface::Group& g, const Declarations& decls,
                           std::map<std::string, FunSig>& env) {
  return Inferer(decls, env).run(g);
}

}  // namespace totality::typing
