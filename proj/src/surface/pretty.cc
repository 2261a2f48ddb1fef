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

#include "surface/pretty.h"

namespace totality::surface {

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

std::string apat(const Pattern& p) {
  if (p.kind == Pattern::Kind::kCtor && !p.args.empty()) {
    return "(" + pretty_print(p) + ")";
  }
  return pretty_print(p);
}

bool needs_parens(const Expr& e) {
  return (e.kind == Expr::Kind::kCall || e.kind == Expr::Kind::kCtor) &&
         !e.args.empty();
}

std::string atom(const Expr& e) {
  return needs_parens(e) ? "(" + pretty_print(e) + ")" : pretty_print(e);
}

void print_definition(const Definition& d, std::string& out) {
  out += d.name;
  if (d.type) out += " : " + pretty_print(*d.type);
  for (size_t i = 0; i < d.clauses.size(); ++i) {
    const Clause& c = d.clauses[i];
    if (i == 0 && !d.type) {
      out += " ";
    } else {
      out += "\n  | " + d.name + " ";
    }
    for (const auto& p : c.patterns) out += apat(p) + " ";
    out += "= " + pretty_print(c.body);
  }
  out += "\n";
}

}  // namespace

std::string pretty_print(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::kVar:
      return t.name;
    case TypeExpr::Kind::kArrow: {
      std::string dom = pretty_print(t.args[0]);
      if (t.args[0].kind == TypeExpr::Kind::kArrow) dom = "(" + dom + ")";
      return dom + " -> " + pretty_print(t.args[1]);
    }
    case TypeExpr::Kind::kApp: {
      if (t.args.empty()) return t.name;
      std::vector<std::string> as;
      for (const auto& a : t.args) as.push_back(pretty_print(a));
      return t.name + "(" + join(as, ", ") + ")";
    }
  }
  return "";
}

std::string pretty_print(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::kVar:
      return p.name;
    case Pattern::Kind::kWild:
      return "_";
    case Pattern::Kind::kInt:
      return std::to_string(p.value);
    case Pattern::Kind::kEmpty:
      return "{}";
    case Pattern::Kind::kCtor: {
      std::string s = p.name;
      for (const auto& a : p.args) s += " " + apat(a);
      return s;
    }
    case Pattern::Kind::kRecord: {
      std::vector<std::string> fs;
      for (size_t i = 0; i < p.fields.size(); ++i) {
        fs.push_back(p.fields[i] + " = " + pretty_print(p.args[i]));
      }
      return "{ " + join(fs, "; ") + " }";
    }
  }
  return "";
}

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kName:
    case Expr::Kind::kVar:
      return e.name;
    case Expr::Kind::kInt:
      return std::to_string(e.value);
    case Expr::Kind::kEmpty:
      return "{}";
    case Expr::Kind::kCall:
    case Expr::Kind::kCtor: {
      std::string s = e.name;
      for (const auto& a : e.args) s += " " + atom(a);
      return s;
    }
    case Expr::Kind::kProj:
      return atom(e.args[0]) + "." + e.name;
    case Expr::Kind::kRecord: {
      std::vector<std::string> fs;
      for (size_t i = 0; i < e.fields.size(); ++i) {
        fs.push_back(e.fields[i] + " = " + pretty_print(e.args[i]));
      }
      return "{ " + join(fs, "; ") + " }";
    }
  }
  return "";
}

std::string pretty_print(const Program& p) {
  std::string out;
  for (const auto& t : p.types) {
    out += t.codata ? "codata " : "data ";
    out += t.name;
    if (!t.params.empty()) out += "(" + join(t.params, ", ") + ")";
    out += " where";
    for (size_t i = 0; i < t.items.size(); ++i) {
      out += i ? "\n  | " : " ";
      out += t.items[i].name + " : " + pretty_print(t.items[i].type);
    }
    out += "\n\n";
  }
  for (const auto& g : p.groups) {
    if (g.bound_b || g.bound_d) {
      std::vector<std::string> bs;
      if (g.bound_b) bs.push_back("B=" + std::to_string(*g.bound_b));
      if (g.bound_d) bs.push_back("D=" + std::to_string(*g.bound_d));
      out += "-- totality: " + join(bs, ", ") + "\n";
    }
    for (size_t i = 0; i < g.defs.size(); ++i) {
      out += i ? "and " : "val ";
      print_definition(g.defs[i], out);
    }
    out += "\n";
  }
  return out;
}

}  // namespace totality::surface
