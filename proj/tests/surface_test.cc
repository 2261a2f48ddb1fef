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

namespace totality::surface {
namespace {

std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(TOTALITY_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Program parse_ok(const std::string& src) {
  auto r = parse_program(src);
  EXPECT_TRUE(r.ok()) << (r.errors.empty() ? "" : to_string(r.errors.front()));
  return r.ok() ? *r.program : Program{};
}

TEST(Parser, LengthListing) {
  Program p = parse_ok(read_corpus("length.ch"));
  EXPECT_EQ(p.types.size(), 2u);
  ASSERT_EQ(p.groups.size(), 1u);
  ASSERT_EQ(p.groups[0].defs.size(), 1u);
  EXPECT_EQ(p.groups[0].defs[0].name, "length");
  EXPECT_EQ(p.groups[0].defs[0].clauses.size(), 2u);
}

TEST(Parser, EmptySource) {
  Program p = parse_ok("");
  EXPECT_TRUE(p.types.empty());
  EXPECT_TRUE(p.groups.empty());
}

TEST(Parser, ReportsPositionOfSyntaxError) {
  auto r = parse_program("val f =\n  | f x = (x");
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.errors.empty());
  EXPECT_EQ(r.errors.front().pos.line, 2);
}

TEST(Parser, MutualGroupAndPragma) {
  Program p = parse_ok(
      "-- totality: B=2, D=0\n"
      "val s1 = s2.Tail\n"
      "and s2 = { Head = s1 ; Tail = s1 }\n");
  ASSERT_EQ(p.groups.size(), 1u);
  EXPECT_EQ(p.groups[0].defs.size(), 2u);
  EXPECT_EQ(p.groups[0].bound_b, 2);
  EXPECT_EQ(p.groups[0].bound_d, 0);
}

TEST(Desugar, EmptyRecordPatternBindsDummy) {
  Program p = desugar(parse_ok(
      "data nat where Zero : nat | Succ : nat -> nat\n"
      "val f : nat -> nat\n  | f (Zero {}) = Succ (Zero {})\n  | f (Succ n) = n\n"));
  const Clause& c = p.groups[0].defs[0].clauses[0];
  ASSERT_EQ(c.patterns[0].args.size(), 1u);
  const std::string dummy = c.patterns[0].args[0].name;
  EXPECT_EQ(dummy.rfind("_x", 0), 0u);
  EXPECT_EQ(pretty_print(c.patterns[0]), "Zero " + dummy);
  EXPECT_EQ(pretty_print(c.body), "Succ (Zero " + dummy + ")");
}

TEST(Desugar, EmptyRecordWithoutVariableUsesHelper) {
  Program p = desugar(parse_ok(
      "data nat where Zero : nat | Succ : nat -> nat\n"
      "val g : nat -> nat\n  | g (Zero {}) = Zero {}\n  | g (Succ x) = Zero {}\n"));
  const Clause& c = p.groups[0].defs[0].clauses[1];
  EXPECT_EQ(pretty_print(c.body), "Zero (empty_record x)");
}

TEST(Desugar, IdentityWithoutEmptyRecords) {
  Program p = parse_ok(read_corpus("nats.ch"));
  EXPECT_EQ(desugar(p), p);
}

TEST(Validate, AcceptsRecursiveConstant) {
  auto r = validate_restrictions(desugar(parse_ok(read_corpus("bad_s.ch"))));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.program->groups[0].recursive);
}

TEST(Validate, AcceptsTwoArguments) {
  auto r = validate_restrictions(desugar(parse_ok(read_corpus("sums.ch"))));
  EXPECT_TRUE(r.ok());
}

TEST(Validate, RejectsNonLinearPattern) {
  auto r = validate_restrictions(desugar(parse_ok(
      "data list('x) where Nil : list('x) | Cons : 'x -> list('x) -> list('x)\n"
      "val f : list(nat) -> nat\n  | f (Cons x x) = x\n")));
  EXPECT_FALSE(r.ok());
}

TEST(Validate, RejectsOverApplication) {
  auto r = validate_restrictions(desugar(parse_ok("val f = f f\n")));
  EXPECT_FALSE(r.ok());
}

TEST(Validate, RejectsForwardReference) {
  auto r = validate_restrictions(desugar(parse_ok("val f = g\nval g = f\n")));
  EXPECT_FALSE(r.ok());
}

TEST(Pretty, RoundTripsCorpus) {
  for (const char* f : {"nats.ch", "length.ch", "bad_s.ch", "sums.ch", "nats_list.ch",
                        "half.ch", "incompatible.ch", "swap.ch", "mutual.ch"}) {
    Program p = parse_ok(read_corpus(f));
    auto again = parse_program(pretty_print(p));
    ASSERT_TRUE(again.ok()) << f << "\n" << pretty_print(p);
    EXPECT_EQ(*again.program, p) << f;
  }
}

}  // namespace
}  // namespace totality::surface
