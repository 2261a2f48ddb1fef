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

#include "typing/types.h"

namespace totality::typing {

TypePtr var(const std::string& name) {
  auto t = std::make_shared<Type>();
  t->is_var = true;
  t->name = name;
  return t;
}

TypePtr con(const std::string& name, std::vector<TypePtr> args) {
  auto t = std::make_shared<Type>();
  t->name = name;
  t->args = std::move(args);
  return t;
}

std::string to_string(const TypePtr& t) {
  if (t->args.empty()) return t->name;
  std::string s = t->name + "(";
  for (size_t i = 0; i < t->args.size(); ++i) {
    if (i) s += ",";
    s += to_string(t->args[i]);
  }
  return s + ")";
}

bool same(const TypePtr& a, const TypePtr& b) {
  if (a->is_var != b->is_var || a->name != b->name ||
      a->args.size() != b->args.size()) {
    return false;
  }
  for (size_t i = 0; i < a->args.size(); ++i) {
    if (!same(a->args[i], b->args[i])) return false;
  }
  return true;
}

TypePtr Subst::apply(const TypePtr& t) const {
  if (t->is_var) {
    auto it = m_.find(t->name);
    return it == m_.end() ? t : apply(it->second);
  }
  if (t->args.empty()) return t;
  std::vector<TypePtr> args;
  for (const auto& a : t->args) args.push_back(apply(a));
  return con(t->name, std::move(args));
}

namespace {

bool occurs(const std::string& v, const TypePtr& t) {
  if (t->is_var) return t->name == v;
  for (const auto& a : t->args) {
    if (occurs(v, a)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::string> unify(const TypePtr& a0, const TypePtr& b0, Subst& s) {
  TypePtr a = s.apply(a0);
  TypePtr b = s.apply(b0);
  if (a->is_var && b->is_var && a->name == b->name) return std::nullopt;
  if (a->is_var || b->is_var) {
    const TypePtr& v = a->is_var ? a : b;
    const TypePtr& t = a->is_var ? b : a;
    if (occurs(v->name, t)) {
      return "occurs check: " + v->name + " in " + to_string(t);
    }
    s.bind(v->name, t);
    return std::nullopt;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) {
    return "clash: " + to_string(a) + " vs " + to_string(b);
  }
  for (size_t i = 0; i < a->args.size(); ++i) {
    if (auto err = unify(a->args[i], b->args[i], s)) return err;
  }
  return std::nullopt;
}

}  // namespace totality::typing
