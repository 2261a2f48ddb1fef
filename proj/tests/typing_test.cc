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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "surface/desugar.h"
#include "surface/parser.h"
#include "surface/pretty.h"
#include "surface/validate.h"
#include "typing/infer.h"
#include "typing/priorities.h"

namespace totality::typing {
namespace {

std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(TOTALITY_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Typed {
  surface::Program prog;
  std::vector<GroupTyping> typings;
  std::vector<PriorityMap> priorities;
};

// Runs the front end and the typing of every group.
Typed type_source(const std::string& src) {
  auto parsed = surface::parse_program(src);
  EXPECT_TRUE(parsed.ok());
  auto valid = surface::validate_restrictions(surface::desugar(*parsed.program));
  EXPECT_TRUE(valid.ok());
  Typed t{*valid.program, {}, {}};
  Declarations decls(t.prog);
  std::map<std::string, FunSig> env;
  for (auto& g : t.prog.groups) {
    t.typings.push_back(annotate_group(g, decls, env));
    t.priorities.push_back(assign_priorities(t.typings.back(), decls));
    annotate_priorities(g, t.typings.back(), t.priorities.back());
  }
  return t;
}

TEST(Unify, HeadMatch) {
  Subst s;
  ASSERT_FALSE(unify(con("list", {var("a")}), con("list", {con("nat")}), s));
  ASSERT_EQ(s.bindings().size(), 1u);
  EXPECT_EQ(to_string(s.apply(var("a"))), "nat");
}

TEST(Unify, Identity) {
  Subst s;
  EXPECT_FALSE(unify(var("a"), var("a"), s));
  EXPECT_TRUE(s.bindings().empty());
}

TEST(Unify, Clash) {
  Subst s;
  EXPECT_TRUE(unify(con("nat"), con("stream", {con("nat")}), s));
}

TEST(Unify, OccursCheck) {
  Subst s;
  EXPECT_TRUE(unify(var("a"), con("list", {var("a")}), s));
}

TEST(Infer, NatsRecordIsStreamOfNat) {
  Typed t = type_source(read_corpus("nats.ch"));
  const auto& body = t.prog.groups[0].defs[0].clauses[0].body;
  EXPECT_EQ(to_string(t.typings[0].table.at(body.ann.type_id)), "stream(nat)");
}

TEST(Infer, MissingSignatureIsInferred) {
  Typed t = type_source(
      "data nat where Zero : nat | Succ : nat -> nat\n"
      "val double\n  | double Zero = Zero\n  | double (Succ n) = Succ (Succ (double n))\n");
  EXPECT_EQ(to_string(t.typings[0].sigs.at("double")), "nat -> nat");
}

TEST(Infer, UnknownConstructor) {
  auto parsed = surface::parse_program(
      "data nat where Zero : nat\nval f : nat -> nat\n  | f x = Foo x\n");
  ASSERT_TRUE(parsed.ok());
  auto valid = surface::validate_restrictions(surface::desugar(*parsed.program));
  if (!valid.ok()) return;  // rejected even earlier: fine
  surface::Program p = *valid.program;
  Declarations decls(p);
  std::map<std::string, FunSig> env;
  EXPECT_THROW(annotate_group(p.groups[0], decls, env), TypeError);
}

TEST(Infer, TypeMismatch) {
  auto parsed = surface::parse_program(
      "data nat where Zero : nat | Succ : nat -> nat\n"
      "codata stream('x) where Head : stream('x) -> 'x | Tail : stream('x) -> stream('x)\n"
      "val f : nat -> nat\n  | f x = { Head = x ; Tail = x }\n");
  ASSERT_TRUE(parsed.ok());
  auto valid = surface::validate_restrictions(surface::desugar(*parsed.program));
  ASSERT_TRUE(valid.ok());
  surface::Program p = *valid.program;
  Declarations decls(p);
  std::map<std::string, FunSig> env;
  EXPECT_THROW(annotate_group(p.groups[0], decls, env), TypeError);
}

TEST(Priorities, Nats) {
  Typed t = type_source(read_corpus("nats.ch"));
  const auto& of = t.priorities[0].of;
  EXPECT_EQ(of.at("stream(nat)"), 0);
  EXPECT_EQ(of.at("nat"), 1);
  EXPECT_EQ(of.at("unit"), 2);
}

TEST(Priorities, BadStream) {
  Typed t = type_source(read_corpus("bad_s.ch"));
  const auto& of = t.priorities[0].of;
  EXPECT_EQ(of.at("stream(stree)"), 0);
  EXPECT_EQ(of.at("stree"), 1);
}

TEST(Priorities, NatsList) {
  Typed t = type_source(read_corpus("nats_list.ch"));
  const auto& of = t.priorities[0].of;
  EXPECT_EQ(of.at("list(nat)"), 1);
  EXPECT_EQ(of.at("nat"), 3);
  EXPECT_EQ(of.at("unit"), 4);
}

TEST(Priorities, ParityAndNesting) {
  // Codata even, data odd, proper subexpressions strictly above.
  for (const char* f : {"nats.ch", "length.ch", "bad_s.ch", "sums.ch", "nats_list.ch"}) {
    Typed t = type_source(read_corpus(f));
    for (const auto& pm : t.priorities) {
      for (const auto& [k, v] : pm.of) {
        const bool codata = k.rfind("stream", 0) == 0 || k.rfind("prod", 0) == 0 ||
                            k == "unit";
        EXPECT_EQ(v % 2, codata ? 0 : 1) << f << " " << k;
        for (const auto& [k2, v2] : pm.of) {
          if (k2 != k && k.find("(" + k2) != std::string::npos) {
            EXPECT_GT(v2, v) << f << " " << k2 << " inside " << k;
          }
        }
      }
    }
  }
}

TEST(Priorities, Minimal) {
  // Lowering any single priority by 2 breaks a constraint or the parity.
  Typed t = type_source(read_corpus("nats_list.ch"));
  const auto& of = t.priorities[0].of;
  EXPECT_EQ(of.at("nat") - 2, of.at("list(nat)"));
}

TEST(AnnotatePriorities, NatsBody) {
  Typed t = type_source(read_corpus("nats.ch"));
  const auto& body = t.prog.groups[0].defs[0].clauses[0].body;
  ASSERT_EQ(body.kind, surface::Expr::Kind::kRecord);
  EXPECT_EQ(body.ann.priority, 0);
  const auto& tail = body.args.at(1);
  ASSERT_EQ(tail.kind, surface::Expr::Kind::kCall);
  EXPECT_EQ(tail.args.at(0).kind, surface::Expr::Kind::kCtor);
  EXPECT_EQ(tail.args.at(0).ann.priority, 1);
}

TEST(AnnotatePriorities, LengthConsPattern) {
  Typed t = type_source(read_corpus("length.ch"));
  const auto& pat = t.prog.groups[0].defs[0].clauses[1].patterns[0];
  EXPECT_EQ(pat.name, "Cons");
  EXPECT_EQ(pat.ann.priority, 1);
  ASSERT_EQ(pat.args.size(), 1u);
  EXPECT_EQ(pat.args[0].kind, surface::Pattern::Kind::kRecord);
  EXPECT_EQ(pat.args[0].ann.priority, 0);
}

}  // namespace
}  // namespace totality::typing
