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

#include "surface/desugar.h"

#include <map>
#include <optional>
#include <regex>

namespace totality::surface {

namespace {

int count_arrows(const TypeExpr& t) {
  return t.kind == TypeExpr::Kind::kArrow ? 1 + count_arrows(t.args[1]) : 0;
}

class Desugarer {
 public:
  explicit Desugarer(const Program& p) {
    for (const auto& d : p.types) {
      if (d.codata) continue;
      for (const auto& it : d.items) arity_[it.name] = count_arrows(it.type);
    }
    has_nat_ = arity_.count("Zero") && arity_["Zero"] == 0 &&
               arity_.count("Succ") && arity_["Succ"] == 1;
    static const std::regex fresh(R"(_[wx](\d+))");
    for (const auto& g : p.groups) {
      for (const auto& d : g.defs) {
        for (const auto& c : d.clauses) {
          for (const auto& pat : c.patterns) scan(pat, fresh);
        }
      }
    }
  }

  Program run(Program p) {
    for (auto& g : p.groups) {
      for (auto& d : g.defs) {
        for (auto& c : d.clauses) clause(c);
      }
    }
    return p;
  }

 private:
  void scan(const Pattern& p, const std::regex& fresh) {
    std::smatch m;
    if (p.kind == Pattern::Kind::kVar && std::regex_match(p.name, m, fresh)) {
      counter_ = std::max(counter_, std::stoi(m[1].str()));
    }
    for (const auto& a : p.args) scan(a, fresh);
  }

  std::string fresh(char tag) {
    return std::string("_") + tag + std::to_string(++counter_);
  }

  std::optional<int> arity(const std::string& ctor) const {
    auto it = arity_.find(ctor);
    if (it == arity_.end()) return std::nullopt;
    return it->second;
  }

  template <typename Node>
  Node numeral(long n, Pos pos) {
    Node z;
    z.kind = Node::Kind::kCtor;
    z.name = "Zero";
    z.pos = pos;
    for (long i = 0; i < n; ++i) {
      Node s;
      s.kind = Node::Kind::kCtor;
      s.name = "Succ";
      s.pos = pos;
      s.args.push_back(std::move(z));
      z = std::move(s);
    }
    return z;
  }

  // Rewrites constructor argument lists into exactly one argument.
  template <typename Node>
  void fix_ctor_args(Node& n) {
    auto a = arity(n.name);
    if (!a) return;
    if (*a == 0 && n.args.empty()) {
      Node e;
      e.kind = Node::Kind::kEmpty;
      e.pos = n.pos;
      n.args.push_back(std::move(e));
    } else if (*a == 2 && n.args.size() == 2) {
      Node r;
      r.kind = Node::Kind::kRecord;
      r.pos = n.pos;
      r.fields = {"Fst", "Snd"};
      r.args = std::move(n.args);
      n.args.clear();
      n.args.push_back(std::move(r));
    }
  }

  void pattern(Pattern& p, std::optional<std::string>& first_var,
               std::optional<std::string>& dummy) {
    switch (p.kind) {
      case Pattern::Kind::kWild:
        p.kind = Pattern::Kind::kVar;
        p.name = fresh('w');
        break;
      case Pattern::Kind::kEmpty:
        p.kind = Pattern::Kind::kVar;
        p.name = fresh('x');
        break;
      case Pattern::Kind::kInt:
        if (has_nat_) p = numeral<Pattern>(p.value, p.pos);
        break;
      default:
        break;
    }
    if (p.kind == Pattern::Kind::kCtor) fix_ctor_args(p);
    for (auto& a : p.args) pattern(a, first_var, dummy);
    if (p.kind == Pattern::Kind::kVar && !first_var) first_var = p.name;
    if (p.kind == Pattern::Kind::kCtor && arity(p.name) == 0 &&
        p.args.size() == 1 && p.args[0].kind == Pattern::Kind::kVar && !dummy) {
      dummy = p.args[0].name;
    }
  }

  void expr(Expr& e, const std::optional<std::string>& first_var,
            const std::optional<std::string>& dummy) {
    if (e.kind == Expr::Kind::kInt && has_nat_) e = numeral<Expr>(e.value, e.pos);
    if (e.kind == Expr::Kind::kCtor) fix_ctor_args(e);
    if (e.kind == Expr::Kind::kEmpty) {
      Pos pos = e.pos;
      e = Expr();
      e.pos = pos;
      if (dummy) {
        e.kind = Expr::Kind::kName;
        e.name = *dummy;
      } else if (first_var) {
        e.kind = Expr::Kind::kCall;
        e.name = kEmptyRecord;
        Expr v;
        v.kind = Expr::Kind::kName;
        v.name = *first_var;
        v.pos = pos;
        e.args.push_back(std::move(v));
      } else {
        e.kind = Expr::Kind::kName;
        e.name = kEmptyRecord;
      }
      return;
    }
    for (auto& a : e.args) expr(a, first_var, dummy);
  }

  void clause(Clause& c) {
    std::optional<std::string> first_var, dummy;
    for (auto& p : c.patterns) pattern(p, first_var, dummy);
    expr(c.body, first_var, dummy);
  }

  std::map<std::string, int> arity_;
  bool has_nat_ = false;
  int counter_ = 0;
};

}  // namespace

Program desugar(const Program& p) { return Desugarer(p).run(p); }

}  // namespace totality::surface
