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

#include "surface/parser.h"

#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <string>

namespace totality::surface {

std::string to_string(const Pos& p) {
  return std::to_string(p.line) + ":" + std::to_string(p.col);
}

std::string to_string(const Diagnostic& d) {
  return to_string(d.pos) + ": " + d.message;
}

namespace {

enum class Tok { kLower, kUpper, kTyVar, kInt, kSym, kKeyword, kEof };

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

struct Pragma {
  std::optional<int> b;
  std::optional<int> d;
};

struct SyntaxError {
  Pos pos;
  std::string message;
};

const std::set<std::string> kKeywords = {"data", "codata", "where", "val", "and"};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run(std::map<int, Pragma>& pragmas) {
    std::vector<Token> out;
    while (true) {
      skip_space(pragmas);
      Pos pos{line_, col_};
      if (i_ >= s_.size()) {
        out.push_back({Tok::kEof, "", pos});
        return out;
      }
      char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = ident();
        if (id == "_") {
          out.push_back({Tok::kSym, id, pos});
        } else if (kKeywords.count(id)) {
          out.push_back({Tok::kKeyword, id, pos});
        } else if (std::isupper(static_cast<unsigned char>(id[0]))) {
          out.push_back({Tok::kUpper, id, pos});
        } else {
          out.push_back({Tok::kLower, id, pos});
        }
      } else if (c == '\'') {
        advance();
        std::string id = ident();
        if (id.empty()) throw SyntaxError{pos, "expected type variable name"};
        out.push_back({Tok::kTyVar, "'" + id, pos});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string n;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          n += s_[i_];
          advance();
        }
        out.push_back({Tok::kInt, n, pos});
      } else if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::kSym, "->", pos});
      } else if (std::string("(){};=:|,.").find(c) != std::string::npos) {
        advance();
        out.push_back({Tok::kSym, std::string(1, c), pos});
      } else {
        throw SyntaxError{pos, std::string("unexpected character '") + c + "'"};
      }
    }
  }

 private:
  char peek(size_t k) const { return i_ + k < s_.size() ? s_[i_ + k] : '\0'; }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string ident() {
    std::string id;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                              s_[i_] == '_' || s_[i_] == '\'')) {
      id += s_[i_];
      advance();
    }
    return id;
  }

  void skip_space(std::map<int, Pragma>& pragmas) {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == '-' && peek(1) == '-') {
        int line = line_;
        std::string text;
        while (i_ < s_.size() && s_[i_] != '\n') {
          text += s_[i_];
          advance();
        }
        parse_pragma(line, text, pragmas);
      } else {
        return;
      }
    }
  }

  static void parse_pragma(int line, const std::string& text,
                           std::map<int, Pragma>& pragmas) {
    static const std::regex head(R"(^--\s*totality\s*:(.*)$)");
    static const std::regex item(R"(([BD])\s*=\s*(\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, head)) return;
    const std::string rest = m[1].str();
    Pragma p;
    for (std::sregex_iterator it(rest.begin(), rest.end(), item), end; it != end;
         ++it) {
      int v = std::stoi((*it)[2].str());
      if ((*it)[1].str() == "B") {
        p.b = v;
      } else {
        p.d = v;
      }
    }
    pragmas[line] = p;
  }

  std::string_view s_;
  size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::map<int, Pragma> pragmas)
      : toks_(std::move(toks)), pragmas_(std::move(pragmas)) {}

  Program program() {
    Program p;
    while (!at(Tok::kEof)) {
      if (at_keyword("data") || at_keyword("codata")) {
        p.types.push_back(type_decl());
      } else if (at_keyword("val")) {
        p.groups.push_back(group());
      } else {
        fail("unknown top-level form '" + cur().text + "'");
      }
    }
    return p;
  }

 private:
  const Token& cur() const { return toks_[k_]; }
  bool at(Tok t) const { return cur().kind == t; }
  bool at_sym(const char* s) const { return at(Tok::kSym) && cur().text == s; }
  bool at_keyword(const char* s) const {
    return at(Tok::kKeyword) && cur().text == s;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError{cur().pos, msg};
  }

  Token take() { return toks_[k_++]; }

  Token expect(Tok t, const char* what) {
    if (!at(t)) fail(std::string("expected ") + what);
    return take();
  }

  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'");
    take();
  }

  bool accept_sym(const char* s) {
    if (!at_sym(s)) return false;
    take();
    return true;
  }

  TypeDecl type_decl() {
    TypeDecl d;
    d.pos = cur().pos;
    d.codata = take().text == "codata";
    d.name = expect(Tok::kLower, "type name").text;
    if (accept_sym("(")) {
      do {
        d.params.push_back(expect(Tok::kTyVar, "type variable").text);
      } while (accept_sym(","));
      expect_sym(")");
    }
    if (!at_keyword("where")) fail("expected 'where'");
    take();
    accept_sym("|");
    do {
      TypeItem it;
      it.pos = cur().pos;
      it.name = expect(Tok::kUpper, "constructor or destructor name").text;
      expect_sym(":");
      it.type = type();
      d.items.push_back(std::move(it));
    } while (accept_sym("|"));
    return d;
  }

  TypeExpr type() {
    TypeExpr t = btype();
    if (accept_sym("->")) {
      TypeExpr a;
      a.kind = TypeExpr::Kind::kArrow;
      a.args = {std::move(t), type()};
      return a;
    }
    return t;
  }

  TypeExpr btype() {
    TypeExpr t;
    if (at(Tok::kTyVar)) {
      t.kind = TypeExpr::Kind::kVar;
      t.name = take().text;
      return t;
    }
    if (accept_sym("(")) {
      t = type();
      expect_sym(")");
      return t;
    }
    t.kind = TypeExpr::Kind::kApp;
    t.name = expect(Tok::kLower, "type").text;
    if (accept_sym("(")) {
      do {
        t.args.push_back(type());
      } while (accept_sym(","));
      expect_sym(")");
    }
    return t;
  }

  void apply_pragma(int line, Group& g) {
    auto it = pragmas_.find(line - 1);
    if (it == pragmas_.end()) return;
    if (it->second.b) g.bound_b = it->second.b;
    if (it->second.d) g.bound_d = it->second.d;
  }

  Group group() {
    Group g;
    apply_pragma(cur().pos.line, g);
    take();
    g.defs.push_back(definition());
    while (at_keyword("and")) {
      apply_pragma(cur().pos.line, g);
      take();
      g.defs.push_back(definition());
    }
    return g;
  }

  Definition definition() {
    Definition d;
    d.pos = cur().pos;
    d.name = expect(Tok::kLower, "function name").text;
    if (accept_sym(":")) d.type = type();
    if (!at_sym("|")) d.clauses.push_back(clause_rest(cur().pos));
    while (at_sym("|")) {
      Pos pos = take().pos;
      Token name = expect(Tok::kLower, "function name");
      if (name.text != d.name) {
        throw SyntaxError{name.pos, "clause for '" + name.text +
                                        "' inside the definition of '" +
                                        d.name + "'"};
      }
      d.clauses.push_back(clause_rest(pos));
    }
    if (d.clauses.empty()) fail("definition '" + d.name + "' has no clauses");
    return d;
  }

  Clause clause_rest(Pos pos) {
    Clause c;
    c.pos = pos;
    while (!at_sym("=")) c.patterns.push_back(apat());
    take();
    c.body = expr();
    return c;
  }

  bool starts_atom() const {
    return at(Tok::kLower) || at(Tok::kUpper) || at(Tok::kInt) ||
           at_sym("(") || at_sym("{") || at_sym("_");
  }

  Pattern apat() {
    Pattern p;
    p.pos = cur().pos;
    if (at(Tok::kLower)) {
      p.kind = Pattern::Kind::kVar;
      p.name = take().text;
    } else if (accept_sym("_")) {
      p.kind = Pattern::Kind::kWild;
    } else if (at(Tok::kUpper)) {
      p.kind = Pattern::Kind::kCtor;
      p.name = take().text;
    } else if (at(Tok::kInt)) {
      p.kind = Pattern::Kind::kInt;
      p.value = std::stol(take().text);
    } else if (accept_sym("(")) {
      p = pat();
      expect_sym(")");
    } else if (accept_sym("{")) {
      if (accept_sym("}")) {
        p.kind = Pattern::Kind::kEmpty;
        return p;
      }
      p.kind = Pattern::Kind::kRecord;
      do {
        if (at_sym("}")) break;
        p.fields.push_back(expect(Tok::kUpper, "field name").text);
        expect_sym("=");
        p.args.push_back(pat());
      } while (accept_sym(";"));
      expect_sym("}");
    } else {
      fail("expected a pattern");
    }
    return p;
  }

  Pattern pat() {
    if (!at(Tok::kUpper)) return apat();
    Pattern p;
    p.pos = cur().pos;
    p.kind = Pattern::Kind::kCtor;
    p.name = take().text;
    if (at(Tok::kUpper)) {
      p.args.push_back(pat());
    } else {
      while (starts_atom() && !at_sym("=")) p.args.push_back(apat());
    }
    return p;
  }

  Expr expr() {
    if (at(Tok::kUpper)) {
      Expr e;
      e.pos = cur().pos;
      e.kind = Expr::Kind::kCtor;
      e.name = take().text;
      if (at(Tok::kUpper)) {
        e.args.push_back(expr());
      } else {
        while (starts_atom()) e.args.push_back(postfix());
      }
      return e;
    }
    Expr head = postfix();
    if (head.kind == Expr::Kind::kName && starts_atom()) {
      head.kind = Expr::Kind::kCall;
      while (starts_atom()) head.args.push_back(postfix());
    }
    return head;
  }

  Expr postfix() {
    Expr e = atom();
    while (at_sym(".")) {
      Expr p;
      p.pos = take().pos;
      p.kind = Expr::Kind::kProj;
      p.name = expect(Tok::kUpper, "destructor name").text;
      p.args.push_back(std::move(e));
      e = std::move(p);
    }
    return e;
  }

  Expr atom() {
    Expr e;
    e.pos = cur().pos;
    if (at(Tok::kLower)) {
      e.kind = Expr::Kind::kName;
      e.name = take().text;
    } else if (at(Tok::kUpper)) {
      e.kind = Expr::Kind::kCtor;
      e.name = take().text;
    } else if (at(Tok::kInt)) {
      e.kind = Expr::Kind::kInt;
      e.value = std::stol(take().text);
    } else if (accept_sym("(")) {
      e = expr();
      expect_sym(")");
    } else if (accept_sym("{")) {
      if (accept_sym("}")) {
        e.kind = Expr::Kind::kEmpty;
        return e;
      }
      e.kind = Expr::Kind::kRecord;
      do {
        if (at_sym("}")) break;
        e.fields.push_back(expect(Tok::kUpper, "field name").text);
        expect_sym("=");
        e.args.push_back(expr());
      } while (accept_sym(";"));
      expect_sym("}");
    } else {
      fail("expected an expression");
    }
    return e;
  }

  std::vector<Token> toks_;
  std::map<int, Pragma> pragmas_;
  size_t k_ = 0;
};

}  // namespace

ParseResult parse_program(std::string_view source) {
  ParseResult r;
  try {
    std::map<int, Pragma> pragmas;
    auto toks = Lexer(source).run(pragmas);
    r.program = Parser(std::move(toks), std::move(pragmas)).program();
  } catch (const SyntaxError& e) {
    r.errors.push_back({e.pos, e.message});
  }
  return r;
}

}  // namespace totality::surface
