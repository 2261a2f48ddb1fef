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

#include "callgraph/call.h"
#include "scp/scp.h"
#include "test_util.h"

namespace totality::scp {
namespace {

using core::Weight;
using testing::group_of;
using testing::result_of;

Call C(const char* f, const char* term) { return Call(f, core::parse_term(term)); }

TEST(PrincipalNegative, Examples) {
  EXPECT_EQ(principal_negative(Weight{{0, -2}}), 0);
  EXPECT_EQ(principal_negative(Weight{{0, -2}, {1, -1}}), 1);
  EXPECT_EQ(principal_negative(Weight{{0, 1}, {1, -1}}), 1);
  EXPECT_EQ(principal_negative(Weight{{0, -1}, {1, 1}}), 0);
  EXPECT_EQ(principal_negative(Weight{{0, -1}, {1, core::ZInf::inf()}}), 0);
  EXPECT_EQ(principal_negative(Weight{{1, core::ZInf::inf()}}), std::nullopt);
  EXPECT_EQ(principal_negative(Weight{}), std::nullopt);
}

TEST(Condition1, NatsLoopDecreasesOnCodata) {
  auto p = check_condition1(C("nats", "{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, 0);
}

TEST(Condition1, BadStreamHeadLoopFails) {
  EXPECT_FALSE(check_condition1(C("bad_s", "{Head@0 = <{0:-1,1:-1}> bad_s()}")));
}

TEST(Condition1, DaimonOnSpineFails) {
  EXPECT_FALSE(check_condition1(C("f", "{Tail@0 = ? f(x1)}")));
}

TEST(Condition1, EmptySpineFails) {
  EXPECT_FALSE(check_condition1(C("f", "f(x1)")));
}

TEST(Condition2, LengthConsumesList) {
  auto c = check_condition2(C("length", "Succ@1 length(.Snd@0 Cons-@1 x1)"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->arg, 1);
  EXPECT_EQ(c->priority, 1);
}

TEST(Condition2, NoArgumentsFails) {
  EXPECT_FALSE(check_condition2(C("bad_s", "{Tail@0 = <{0:-1}> bad_s()}")));
}

TEST(Condition2, SumsSecondArgument) {
  auto c = check_condition2(C(
      "sums",
      "sums(? .Head@0 x2, {Head@0 = <{0:-1,1:-1}> .Head@0 x2; Tail@0 = .Tail@0 x2})"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->arg, 2);
  EXPECT_EQ(c->priority, 1);
}

TEST(Condition2, SwappedArgumentDoesNotCount) {
  // The decreasing branch ends at x1 but sits in argument 2.
  EXPECT_FALSE(check_condition2(C("f", "f(x2, .Snd@0 Cons-@1 x1)")));
}

TEST(CheckedLoop, NatsRho) {
  EXPECT_TRUE(is_checked_loop(
      C("nats", "{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}"), 1, 1));
}

TEST(CheckedLoop, IncompatibleSelfComposition) {
  // Composing the loop with itself yields nothing, so no tau exists.
  Call alpha(
      "f", callgraph::collapse(1, 1, core::parse_term("f(C1@1 C2-@1 x1)")));
  EXPECT_FALSE(is_checked_loop(alpha, 1, 1));
}

TEST(DefinitionGroup, Nats) {
  auto r = testing::check("nats.ch", 1, 0);
  EXPECT_EQ(result_of(r, "nats"), Result::kTotal);
}

TEST(DefinitionGroup, BadStreamAndDependents) {
  for (int b = 1; b <= 2; ++b) {
    for (int d = 0; d <= 2; ++d) {
      auto r = testing::check("bad_s.ch", b, d);
      EXPECT_EQ(result_of(r, "bad_s"), Result::kUnknown) << b << "," << d;
      EXPECT_EQ(result_of(r, "lower_left"), Result::kTotal) << b << "," << d;
      // magic keeps its verdict; the dependency is advisory.
      EXPECT_EQ(result_of(r, "magic"), Result::kTotal) << b << "," << d;
      const auto& m = group_of(r, "magic").verdicts.at(0);
      EXPECT_EQ(m.depends_on_unknown, std::vector<std::string>{"bad_s"});
    }
  }
}

TEST(DefinitionGroup, UnknownCarriesFailingLoop) {
  auto r = testing::check("bad_s.ch", 1, 1);
  const auto& g = group_of(r, "bad_s");
  ASSERT_EQ(g.verdicts.size(), 1u);
  ASSERT_FALSE(g.verdicts[0].reasons.empty());
  EXPECT_EQ(g.verdicts[0].reasons[0].loop.caller(), "bad_s");
}

TEST(DefinitionGroup, SumsAndLength) {
  EXPECT_EQ(result_of(testing::check("sums.ch", 1, 1), "sums"), Result::kTotal);
  EXPECT_EQ(result_of(testing::check("length.ch", 1, 0), "length"), Result::kTotal);
}

TEST(DefinitionGroup, EmptyClosureIsTotal) {
  callgraph::CallGraph g;
  auto v = check_definition_group({"g"}, g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].result, Result::kTotal);
}

}  // namespace
}  // namespace totality::scp
