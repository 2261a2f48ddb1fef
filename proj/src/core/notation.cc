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

#include "core/notation.h"

#include <cctype>
#include <vector>

namespace totality::core {

namespace {

void print(const Term& t, std::string& out);

void print_kid(const Term& t, std::string& out) {
  if (t->kind == Kind::kSum && t->kids.size() > 1) {
    out += '(';
    print(t, out);
    out += ')';
  } else {
    print(t, out);
  }
}

void print(const Term& t, std::string& out) {
  const std::string p = "@" + std::to_string(t->priority);
  switch (t->kind) {
    case Kind::kParam:
      out += "x" + std::to_string(t->index);
      return;
    case Kind::kConstr:
      out += t->name + p + " ";
      return print_kid(t->kid(), out);
    case Kind::kConstrDual:
      out += t->name + "-" + p + " ";
      return print_kid(t->kid(), out);
    case Kind::kProject:
      out += "." + t->name + p + " ";
      return print_kid(t->kid(), out);
    case Kind::kRecord:
      out += '{';
      for (size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out += "; ";
        out += t->fields[i] + p + " = ";
        print(t->kids[i], out);
      }
      out += '}';
      return;
    case Kind::kFunApp:
      out += t->name + "(";
      for (size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out += ", ";
        print(t->kids[i], out);
      }
      out += ')';
      return;
    case Kind::kDaimon:
      out += "? ";
      return print_kid(t->kid(), out);
    case Kind::kApprox:
      out += "<" + t->weight.str() + "> ";
      return print_kid(t->kid(), out);
    case Kind::kSum:
      if (t->kids.empty()) {
        out += '0';
        return;
      }
      for (size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out += " + ";
        print(t->kids[i], out);
      }
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = parse_sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw NotationError(what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string ident() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                             s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) {
      fail("expected integer");
    }
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  int priority() {
    expect('@');
    return static_cast<int>(integer());
  }

  Weight weight() {
    expect('<');
    expect('{');
    Weight w;
    if (!peek('}')) {
      do {
        int p = static_cast<int>(integer());
        expect(':');
        skip();
        if (s_.substr(pos_, 3) == "inf") {
          pos_ += 3;
          w.set(p, ZInf::inf());
        } else {
          w.set(p, integer());
        }
      } while (accept(','));
    }
    expect('}');
    expect('>');
    return w;
  }

  Term parse_sum() {
    std::vector<Term> parts{parse_unary()};
    while (accept('+')) parts.push_back(parse_unary());
    return parts.size() == 1 ? parts.front() : sum(std::move(parts));
  }

  Term parse_unary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '0') {
      ++pos_;
      return zero();
    }
    if (accept('(')) {
      Term t = parse_sum();
      expect(')');
      return t;
    }
    if (accept('?')) return daimon(parse_unary());
    if (c == '<') {
      Weight w = weight();
      return approx(w, parse_unary());
    }
    if (accept('.')) {
      std::string name = ident();
      int p = priority();
      return project(name, p, parse_unary());
    }
    if (accept('{')) return parse_record();
    std::string name = ident();
    if (accept('(')) {
      std::vector<Term> args;
      if (!accept(')')) {
        do {
          args.push_back(parse_sum());
        } while (accept(','));
        expect(')');
      }
      return funapp(name, std::move(args));
    }
    if (accept('-')) {
      int p = priority();
      return constr_dual(name, p, parse_unary());
    }
    if (peek('@')) {
      int p = priority();
      return constr(name, p, parse_unary());
    }
    if (name.size() > 1 && name[0] == 'x') {
      bool digits = true;
      for (size_t i = 1; i < name.size(); ++i) {
        digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      }
      if (digits) return param(std::stoi(name.substr(1)));
    }
    fail("unexpected identifier '" + name + "'");
  }

  Term parse_record() {
    std::vector<std::pair<std::string, Term>> fields;
    int prio = -1;
    do {
      if (peek('}')) break;
      std::string name = ident();
      int p = priority();
      if (prio >= 0 && p != prio) fail("record fields disagree on priority");
      prio = p;
      expect('=');
      fields.emplace_back(name, parse_sum());
    } while (accept(';'));
    expect('}');
    if (fields.empty()) fail("empty record");
    return record(prio, std::move(fields));
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

Term parse_term(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const InternalError& e) {
    throw NotationError(e.what());
  }
}

}  // namespace totality::core
