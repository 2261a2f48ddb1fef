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

#include "callgraph/closure.h"
#include "callgraph/extract.h"
#include "core/order.h"
#include "test_util.h"

namespace totality::callgraph {
namespace {

using testing::annotated;
using testing::find_def;
using testing::group_of;
using testing::has_edge;
using testing::read_corpus;

Term T(const char* s) { return core::parse_term(s); }

#define EXPECT_TERM(actual, expected)                                   \
  EXPECT_TRUE(core::equal((actual), T(expected)))                       \
      << "got " << core::to_string(actual) << ", want " << (expected)

TEST(PatternSubstitution, SumsSecondClause) {
  auto p = annotated(read_corpus("sums.ch"));
  const auto& clause = find_def(p, "sums").clauses.at(1);
  auto sub = pattern_substitution(clause.patterns);
  EXPECT_TERM(sub.at("acc"), "x1");
  EXPECT_TERM(sub.at("n"), ".Fst@0 Cons-@1 .Head@0 x2");
  EXPECT_TERM(sub.at("l"), ".Snd@0 Cons-@1 .Head@0 x2");
  EXPECT_TERM(sub.at("s"), ".Tail@0 x2");
}

TEST(PatternSubstitution, LengthSecondClause) {
  auto p = annotated(read_corpus("length.ch"));
  auto sub = pattern_substitution(find_def(p, "length").clauses.at(1).patterns);
  EXPECT_TERM(sub.at("l"), ".Snd@0 Cons-@1 x1");
}

TEST(PatternSubstitution, BareVariable) {
  auto p = annotated(read_corpus("nats.ch"));
  auto sub = pattern_substitution(find_def(p, "nats").clauses.at(0).patterns);
  EXPECT_TERM(sub.at("x"), "x1");
}

TEST(BodyToTerm, Length) {
  auto p = annotated(read_corpus("length.ch"));
  EXPECT_TERM(definition_term(find_def(p, "length")),
              "Succ@1 length(.Snd@0 Cons-@1 x1) + Zero@1 Nil-@1 x1");
}

TEST(BodyToTerm, Nats) {
  auto p = annotated(read_corpus("nats.ch"));
  EXPECT_TERM(definition_term(find_def(p, "nats")),
              "{Head@0 = x1; Tail@0 = nats(Succ@1 x1)}");
}

TEST(ExtractCalls, ThreeCallsOfOneBody) {
  Term t = T("C@1 {Fst@0 = f(C-@1 x1); Snd@0 = f(C@1 f(x1))}");
  auto calls = extract_calls("f", t, {"f"});
  ASSERT_EQ(calls.size(), 3u);
  std::vector<Term> terms;
  for (const auto& c : calls) terms.push_back(c.term());
  auto has = [&](const char* s) {
    for (const auto& x : terms) {
      if (core::equal(x, T(s))) return true;
    }
    return false;
  };
  EXPECT_TRUE(has("C@1 {Fst@0 = f(C-@1 x1)}"));
  EXPECT_TRUE(has("C@1 {Snd@0 = f(C@1 ? x1)}"));
  EXPECT_TRUE(has("C@1 {Snd@0 = ? f(x1)}"));
}

TEST(ExtractCalls, VariableHasNoCalls) {
  EXPECT_TRUE(extract_calls("f", T("x1"), {"f"}).empty());
}

TEST(ExtractCalls, NatsSingleCall) {
  auto p = annotated(read_corpus("nats.ch"));
  auto calls = extract_calls("nats", definition_term(find_def(p, "nats")), {"nats"});
  ASSERT_EQ(calls.size(), 1u);
  EXPECT_TERM(calls[0].term(), "{Tail@0 = nats(Succ@1 x1)}");
}

TEST(ExtractCalls, ExternalCallBecomesDaimon) {
  // The daimon sum splits into one call per argument.
  auto calls = extract_calls("f", T("f(g(x1, A-@1 x1))"), {"f"});
  ASSERT_EQ(calls.size(), 2u);
  EXPECT_TRUE(core::equal(calls[0].term(), T("f(? x1)")) ||
              core::equal(calls[1].term(), T("f(? x1)")));
}

TEST(BuildCallgraph, BadStream) {
  auto r = testing::check("bad_s.ch", 2, 2);
  const auto& g = group_of(r, "bad_s").graph;
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_TRUE(has_edge(g, "{Head@0 = Node@1 bad_s()}"));
  EXPECT_TRUE(has_edge(g, "{Tail@0 = bad_s()}"));
}

TEST(BuildCallgraph, LengthHasOneCall) {
  auto r = testing::check("length.ch", 2, 2);
  EXPECT_EQ(group_of(r, "length").graph.edges.size(), 1u);
}

TEST(BuildCallgraph, NonRecursiveIsEmpty) {
  auto r = testing::check("bad_s.ch", 2, 2);
  EXPECT_TRUE(group_of(r, "magic").graph.edges.empty());
}

TEST(Closure, NatsOneStep) {
  auto r = testing::check("nats.ch", 1, 1);
  const auto& c = group_of(r, "nats").closure;
  EXPECT_EQ(c.edges.size(), 2u);
  EXPECT_TRUE(has_edge(c, "{Tail@0 = nats(Succ@1 x1)}"));
  EXPECT_TRUE(has_edge(c, "{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}"));
}

TEST(Closure, BadStreamFiveCallsWithoutPruning) {
  auto r = testing::check("bad_s.ch", 1, 1, /*subsumption=*/false);
  const auto& c = group_of(r, "bad_s").closure;
  EXPECT_EQ(c.edges.size(), 5u);
  EXPECT_TRUE(has_edge(c, "{Tail@0 = <{0:-1}> bad_s()}"));
}

TEST(Closure, EmptyGraph) {
  CallGraph g;
  EXPECT_TRUE(transitive_closure(g).edges.empty());
}

TEST(Closure, EveryCompositionIsSubsumed) {
  for (const char* f : {"nats.ch", "length.ch", "bad_s.ch", "sums.ch", "swap.ch"}) {
    auto r = testing::check(f, 1, 1);
    for (const auto& grp : r.groups) {
      const auto& c = grp.closure;
      for (const auto& a : c.edges) {
        for (const auto& b : c.edges) {
          if (a.callee() != b.caller()) continue;
          for (const auto& k : ccomp(c.b, c.d, b, a)) {
            bool covered = false;
            for (const auto& e : c.edges) covered = covered || subsumes(e, k);
            EXPECT_TRUE(covered) << f << ": " << to_string(k);
          }
        }
      }
    }
  }
}

TEST(Closure, PruningKeepsOnlyMinimalCalls) {
  auto full = testing::check("bad_s.ch", 1, 1, false);
  auto pruned = testing::check("bad_s.ch", 1, 1, true);
  const auto& a = group_of(full, "bad_s").closure.edges;
  const auto& b = group_of(pruned, "bad_s").closure.edges;
  EXPECT_LE(b.size(), a.size());
  for (const auto& e : a) {
    bool covered = false;
    for (const auto& k : b) covered = covered || subsumes(k, e);
    EXPECT_TRUE(covered) << to_string(e);
  }
}

}  // namespace
}  // namespace totality::callgraph
