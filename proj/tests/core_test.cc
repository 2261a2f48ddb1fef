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
#include "core/branch.h"
#include "core/collapse.h"
#include "core/compose.h"
#include "core/normalize.h"
#include "core/notation.h"
#include "core/order.h"
#include "core/weight.h"

namespace totality::core {
namespace {

Term T(const char* s) { return parse_term(s); }

#define EXPECT_TERM(actual, expected)                                   \
  EXPECT_TRUE(equal((actual), T(expected)))                             \
      << "got " << to_string(actual) << ", want " << to_string(T(expected))

TEST(Weight, AddsComponentwise) {
  EXPECT_EQ((Weight{{0, -1}} + Weight{{1, -1}}), (Weight{{0, -1}, {1, -1}}));
  EXPECT_EQ((Weight{} + Weight{{0, 5}}), (Weight{{0, 5}}));
}

TEST(Weight, InfinityAbsorbs) {
  EXPECT_EQ((Weight{{1, 1}} + Weight{{1, ZInf::inf()}}), (Weight{{1, ZInf::inf()}}));
}

TEST(Weight, CancellingComponentsVanish) {
  EXPECT_TRUE((Weight{{0, -1}} + Weight{{0, 1}}).is_zero());
}

TEST(Weight, CoefficientOrderIsReversed) {
  EXPECT_TRUE(coef_leq(Weight{{1, ZInf::inf()}}, Weight{{1, 1}}));
  const Weight a{{0, 3}, {2, -1}};
  EXPECT_TRUE(coef_leq(a, a));
  EXPECT_TRUE(coef_leq(Weight{{0, -1}}, Weight{{0, -2}}));
  EXPECT_FALSE(coef_leq(Weight{{0, -2}}, Weight{{0, -1}}));
}

TEST(Weight, CollapseComponent) {
  EXPECT_EQ(collapse_component(1, 1), ZInf::inf());
  EXPECT_EQ(collapse_component(1, -2), ZInf(-1));
  EXPECT_EQ(collapse_component(3, 0), ZInf(0));
  EXPECT_EQ(collapse_component(2, -2), ZInf(-2));
  EXPECT_EQ(collapse_component(2, 2), ZInf::inf());
}

TEST(Term, SumsAreFlatSortedAndIdempotent) {
  Term a = T("A@1 x1");
  Term b = T("x2");
  EXPECT_TRUE(equal(sum({a, b, a}), sum({b, a})));
  EXPECT_EQ(sum({a, b, a})->kids.size(), 2u);
  EXPECT_TRUE(equal(sum({a}), a));
  EXPECT_TRUE(is_zero(sum({})));
}

TEST(Term, ConstructorsDistributeOverSums) {
  Term t = constr("A", 1, sum({param(1), param(2)}));
  EXPECT_TERM(t, "A@1 x1 + A@1 x2");
  EXPECT_TRUE(is_zero(constr("A", 1, zero())));
}

TEST(Notation, RoundTrips) {
  for (const char* s : {"x1", "0", "A@1 x1", "A-@1 .D@0 x2", "? x1", "<{0:-1,1:inf}> x1",
                        "{D@0 = x1; E@0 = x2}", "f(x1, A@1 x2)", "bad_s()",
                        "{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}",
                        "A@1 x1 + x2"}) {
    Term t = T(s);
    EXPECT_TRUE(equal(T(to_string(t).c_str()), t)) << s << " -> " << to_string(t);
  }
}

TEST(Notation, RejectsGarbage) {
  EXPECT_THROW(parse_term("A@ x1"), NotationError);
  EXPECT_THROW(parse_term("{D@0 = }"), NotationError);
}

TEST(Normalize, DestructorCancelsConstructor) {
  EXPECT_TERM(nf(T("A-@1 A@1 x1")), "x1");
}

TEST(Normalize, MismatchedConstructorIsZero) {
  EXPECT_TRUE(is_zero(nf(T("A-@1 B@1 x1"))));
}

TEST(Normalize, ZeroFieldHidesProjection) {
  EXPECT_TRUE(is_zero(nf(T(".D@0 {D@0 = x1; E@0 = A-@1 B@1 x1}"))));
}

TEST(Normalize, ProjectionSelectsField) {
  EXPECT_TERM(nf(T(".D@0 {D@0 = x1; E@0 = x2}")), "x1");
  EXPECT_TRUE(is_zero(nf(T(".E@0 {D@0 = x1}"))));
}

TEST(Normalize, DaimonAbsorbsConstructors) {
  EXPECT_TERM(nf(T("? A@1 x1")), "? x1");
  EXPECT_TERM(nf(T("A-@1 ? x1")), "? x1");
  EXPECT_TERM(nf(T("? ? x1")), "? x1");
}

TEST(Normalize, WeightAbsorbsConstructorBelow) {
  EXPECT_TERM(nf(T("<{}> Succ@1 x1")), "<{1:1}> x1");
  EXPECT_TERM(nf(T("A-@1 <{1:2}> x1")), "<{1:1}> x1");
  EXPECT_TERM(nf(T("<{0:1}> <{0:-3}> x1")), "<{0:-2}> x1");
}

TEST(Normalize, DualSignsAboveCalls) {
  EXPECT_TERM(nf(T("{Tail@0 = <{}> {Tail@0 = f(x1)}}")), "{Tail@0 = <{0:-1}> f(x1)}");
}

TEST(Normalize, WideRecordUnderWeightSplits) {
  EXPECT_TERM(nf(T("<{}> {D@0 = x1; E@0 = x2}")), "? x1 + ? x2");
}

TEST(Normalize, OutputsNormalForms) {
  for (const char* s : {"A-@1 A@1 x1", "<{}> Succ@1 x1", "? A@1 x1", "f(A-@1 A@1 x1)"}) {
    EXPECT_TRUE(is_normal_form(nf(T(s)))) << s;
  }
  EXPECT_FALSE(is_normal_form(T("A-@1 A@1 x1")));
}

TEST(Compose, Substitute) {
  EXPECT_TERM(substitute(T("x1"), {{1, T("A@1 x1")}}), "A@1 x1");
  EXPECT_TERM(substitute(T("Succ@1 x1"), {{1, T("Succ@1 x1")}}), "Succ@1 Succ@1 x1");
  EXPECT_TERM(substitute(T("f(x1)"), {{1, T("A@1 x1 + x2")}}), "f(A@1 x1) + f(x2)");
}

TEST(Compose, NatsLoopTwice) {
  Term sigma = T("{Tail@0 = nats(Succ@1 x1)}");
  EXPECT_TERM(compose(sigma, sigma, "nats"),
              "{Tail@0 = {Tail@0 = nats(Succ@1 Succ@1 x1)}}");
}

TEST(Compose, IdentityOnTheLeft) {
  Term t = T("{D@0 = A@1 g(x1)}");
  EXPECT_TERM(compose(T("f(x1)"), t, "f"), "{D@0 = A@1 g(x1)}");
}

TEST(Compose, NestedCallsMultiply) {
  EXPECT_TERM(compose(T("f(f(x1))"), T("g(x1) + h(x1)"), "f"),
              "g(g(x1)) + g(h(x1)) + h(g(x1)) + h(h(x1))");
}

TEST(Collapse, WeightsAtBoundOne) {
  EXPECT_TERM(collapse_weights(1, T("<{1:1}> x1")), "<{1:inf}> x1");
  EXPECT_TERM(collapse_weights(1, T("<{1:-2}> x1")), "<{1:-1}> x1");
  EXPECT_TERM(collapse_weights(3, T("<{0:0,1:2}> x1")), "<{1:2}> x1");
}

TEST(Collapse, DepthTwoKeepsOuterLayers) {
  // With W = 3: C1 C2 <1 + 3 - 2> C6- C7- x.
  Term t = T("C1@1 C2@1 C3@1 <{1:3}> C4-@1 C5-@1 C6-@1 C7-@1 x1");
  EXPECT_TERM(collapse_depth(2, nf(t)), "C1@1 C2@1 <{1:2}> C6-@1 C7-@1 x1");
}

TEST(Collapse, DepthZeroOnCall) {
  Term t = T("Succ@1 f(.Snd@0 Cons-@1 x1)");
  EXPECT_TERM(collapse_depth(0, t), "<{1:-1}> f(<{0:-1,1:-1}> x1)");
}

TEST(Collapse, ShallowTermUnchanged) {
  Term t = T("A@1 f(B-@1 x1)");
  EXPECT_TERM(collapse_depth(5, t), "A@1 f(B-@1 x1)");
}

TEST(Order, Reflexive) {
  for (const char* s : {"x1", "A@1 f(? x1)", "<{1:-1}> f(<{0:-1}> x1)", "? x1 + x2"}) {
    EXPECT_TRUE(sleq(T(s), T(s))) << s;
  }
}

TEST(Order, DaimonBelowCall) { EXPECT_TRUE(sleq(T("? x1"), T("f(x1)"))); }

TEST(Order, ConstructorNotBelowVariable) {
  EXPECT_FALSE(sleq(T("x1"), T("A@1 x1")));
  EXPECT_FALSE(sleq(T("A@1 x1"), T("x1")));
}

TEST(Order, LargerWeightIsSmaller) {
  EXPECT_TRUE(sleq(T("<{1:inf}> x1"), T("<{1:1}> x1")));
  EXPECT_FALSE(sleq(T("<{1:1}> x1"), T("<{1:inf}> x1")));
}

TEST(Order, ZeroIsTop) {
  EXPECT_TRUE(sleq(T("x1"), zero()));
  EXPECT_FALSE(sleq(zero(), T("x1")));
}

TEST(Order, SumBelowEachSummand) {
  EXPECT_TRUE(sleq(T("x1 + A@1 x1"), T("A@1 x1")));
  EXPECT_FALSE(sleq(T("A@1 x1"), T("x1 + A@1 x1")));
}

TEST(Coherence, Examples) {
  EXPECT_TRUE(sqcoh(T("A@1 f(x1)"), T("A@1 f(x1)")));
  EXPECT_TRUE(sqcoh(T("? .Tail@0 x1"), T("? x1")));
  EXPECT_FALSE(sqcoh(T("A@1 x1"), T("B@1 x1")));
}

TEST(Branch, RecordFields) {
  auto bs = branches(T("{Fst@0 = x1; Snd@0 = C-@1 x1}"));
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_EQ(bs[0].items.size(), 1u);
  EXPECT_EQ(bs[0].items[0].tag, BranchItem::Tag::kField);
  EXPECT_EQ(bs[0].items[0].name, "Fst");
  EXPECT_EQ(bs[1].items.size(), 2u);
  EXPECT_EQ(bs[1].items[1].tag, BranchItem::Tag::kConstrDual);
  EXPECT_EQ(bs[1].param, 1);
}

TEST(Branch, VariableAndDaimon) {
  auto bs = branches(T("x1"));
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_TRUE(bs[0].items.empty());
  EXPECT_TRUE(branches(T("? x1")).empty());
}

TEST(Branch, Weights) {
  auto b = branches(T(".Snd@0 Cons-@1 x1")).at(0);
  EXPECT_EQ(branch_weight(b.items, WeightMode::kStandard), (Weight{{0, -1}, {1, -1}}));
  auto w = branches(T("<{1:-1}> x1")).at(0);
  EXPECT_EQ(branch_weight(w.items, WeightMode::kStandard), (Weight{{1, -1}}));
  callgraph::Call rho("nats", T("{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}"));
  EXPECT_EQ(branch_weight(rho.spine(), WeightMode::kDual), (Weight{{0, -2}}));
}

TEST(Ccomp, NatsLoop) {
  callgraph::Call sigma("nats", callgraph::collapse(1, 1, T("{Tail@0 = nats(Succ@1 x1)}")));
  auto rho = callgraph::ccomp(1, 1, sigma, sigma);
  ASSERT_EQ(rho.size(), 1u);
  EXPECT_TERM(rho[0].term(), "{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}");
}

TEST(Ccomp, LengthLoop) {
  callgraph::Call sigma("length",
                        callgraph::collapse(1, 0, T("Succ@1 length(.Snd@0 Cons-@1 x1)")));
  EXPECT_TERM(sigma.term(), "<{1:-1}> length(<{0:-1,1:-1}> x1)");
  auto rho = callgraph::ccomp(1, 0, sigma, sigma);
  ASSERT_EQ(rho.size(), 1u);
  EXPECT_TERM(rho[0].term(), "<{1:-1}> length(<{0:-1,1:-1}> x1)");
}

TEST(Ccomp, BadStreamTailLoop) {
  callgraph::Call sigma2("bad_s", callgraph::collapse(1, 1, T("{Tail@0 = bad_s()}")));
  auto rho = callgraph::ccomp(1, 1, sigma2, sigma2);
  ASSERT_EQ(rho.size(), 1u);
  EXPECT_TERM(rho[0].term(), "{Tail@0 = <{0:-1}> bad_s()}");
}

TEST(Ccomp, IncompatiblePatternsVanish) {
  // f (C1 x) calling f (C2 x): the composite needs C1- C2 = 0.
  callgraph::Call alpha("f", T("f(C2@1 C1-@1 x1)"));
  EXPECT_TRUE(callgraph::ccomp(1, 1, alpha, alpha).empty());
}

}  // namespace
}  // namespace totality::core
