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

#include "typing/priorities.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace totality::typing {

namespace {

constexpr size_t kMaxInstances = 512;

struct Instances {
  std::map<std::string, TypePtr> types;
  std::map<std::string, std::set<std::string>> next;
};

void collect(const TypePtr& t, const Declarations& decls, Instances& out) {
  if (is_opaque(t)) return;
  std::string key = to_string(t);
  if (out.types.count(key)) return;
  if (out.types.size() >= kMaxInstances) {
    throw PriorityError("priority assignment failed: unbounded type instances");
  }
  out.types[key] = t;
  auto& succ = out.next[key];
  for (const auto& a : t->args) collect(a, decls, out);
  for (const auto& s : decls.deconstruct(t)) {
    if (is_opaque(s)) continue;
    succ.insert(to_string(s));
    collect(s, decls, out);
  }
}

void proper_subterms(const TypePtr& t, std::set<std::string>& out) {
  for (const auto& a : t->args) {
    if (is_opaque(a)) continue;
    out.insert(to_string(a));
    proper_subterms(a, out);
  }
}

int above(int bound, bool odd) {
  int p = bound + 1;
  if ((p % 2 == 1) != odd) ++p;
  return p;
}

}  // namespace

std::string to_string(const PriorityMap& pm) {
  std::vector<std::pair<int, std::string>> rows;
  for (const auto& [k, v] : pm.of) rows.emplace_back(v, k);
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [v, k] : rows) out += k + " ↦ " + std::to_string(v) + "\n";
  return out;
}

PriorityMap assign_priorities(const GroupTyping& typing, const Declarations& decls) {
  Instances inst;
  for (const auto& t : typing.table) collect(t, decls, inst);

  std::vector<std::string> keys;
  std::map<std::string, int> index;
  for (const auto& [k, t] : inst.types) {
    index[k] = static_cast<int>(keys.size());
    keys.push_back(k);
  }
  const int n = static_cast<int>(keys.size());

  // reach[i][j]: j reachable from i in one or more steps.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<int> stack;
    for (const auto& s : inst.next[keys[i]]) stack.push_back(index.at(s));
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      if (reach[i][j]) continue;
      reach[i][j] = 1;
      for (const auto& s : inst.next[keys[j]]) stack.push_back(index.at(s));
    }
  }
  std::vector<int> scc(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    if (scc[i] >= 0) continue;
    scc[i] = static_cast<int>(members.size());
    members.push_back({i});
    for (int j = i + 1; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) {
        scc[j] = scc[i];
        members.back().push_back(j);
      }
    }
  }

  // below[s] must exceed t for every (s, t) in sub; the component c must
  // reach above t for every (c, t) in into.
  std::vector<std::pair<int, int>> sub;
  std::set<std::pair<int, int>> into;
  for (int t = 0; t < n; ++t) {
    std::set<std::string> subs;
    proper_subterms(inst.types.at(keys[t]), subs);
    for (const auto& s : subs) sub.emplace_back(index.at(s), t);
    for (int s = 0; s < n; ++s) {
      if (reach[t][s] && scc[s] != scc[t]) into.emplace(scc[s], t);
    }
  }

  std::vector<bool> odd(n);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) {
    odd[i] = !decls.is_codata(inst.types.at(keys[i])->name);
    p[i] = odd[i] ? 1 : 0;
  }
  const int limit = 2 * n + 2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [s, t] : sub) {
      if (p[s] <= p[t]) {
        p[s] = above(p[t], odd[s]);
        changed = true;
      }
    }
    for (const auto& [c, t] : into) {
      int top = members[c].front();
      for (int m : members[c]) {
        if (p[m] > p[top]) top = m;
      }
      if (p[top] <= p[t]) {
        p[top] = above(p[t], odd[top]);
        changed = true;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (p[i] > limit) throw PriorityError("priority assignment failed");
    }
  }

  PriorityMap pm;
  for (int i = 0; i < n; ++i) pm.of[keys[i]] = p[i];
  return pm;
}

namespace {

int lookup(const GroupTyping& typing, const PriorityMap& pm, int type_id) {
  const std::string key = to_string(typing.table.at(type_id));
  auto it = pm.of.find(key);
  if (it == pm.of.end()) {
    throw PriorityError("internal: no priority for type instance " + key);
  }
  return it->second;
}

void mark(surface::Pattern& p, const GroupTyping& typing, const PriorityMap& pm) {
  if (p.ann.type_id >= 0) p.ann.priority = lookup(typing, pm, p.ann.type_id);
  for (auto& a : p.args) mark(a, typing, pm);
}

void mark(surface::Expr& e, const GroupTyping& typing, const PriorityMap& pm) {
  if (e.ann.type_id >= 0) e.ann.priority = lookup(typing, pm, e.ann.type_id);
  for (auto& a : e.args) mark(a, typing, pm);
}

}  // namespace

void annotate_priorities(surface::Group& g, const GroupTyping& typing,
                         const PriorityMap& pm) {
  for (auto& d : g.defs) {
    for (auto& c : d.clauses) {
      for (auto& p : c.patterns) mark(p, typing, pm);
      mark(c.body, typing, pm);
    }
  }
}

}  // namespace totality::typing
