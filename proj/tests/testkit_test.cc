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

#include "core/normalize.h"
#include "core/notation.h"
#include "core/order.h"
#include "testkit/testkit.h"

namespace totality::testkit {
namespace {

Term T(const char* s) { return core::parse_term(s); }

const TermUniverse& small_universe() {
  static const TermUniverse u;
  return u;
}

TEST(Generators, Reproducible) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_TRUE(core::equal(gen_term(6, seed), gen_term(6, seed)));
  }
}

TEST(Generators, CallHasOneFunction) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Term c = gen_call("f", 2, 6, rng);
    EXPECT_TRUE(core::equal(c, core::nf(c))) << core::to_string(c);
    EXPECT_EQ(core::to_string(c).find("f("), core::to_string(c).rfind("f("));
  }
}

TEST(Universe, Nonempty) {
  const auto& u = small_universe();
  EXPECT_GT(u.terms().size(), 100u);
  EXPECT_GT(u.edge_count(), u.terms().size());
  EXPECT_TRUE(u.contains(T("x1")));
}

TEST(Oracle, HandExamples) {
  const auto& u = small_universe();
  EXPECT_TRUE(leq_oracle(T("? x1"), T("A@1 x1"), u));
  EXPECT_TRUE(leq_oracle(T("A@1 x1"), T("0"), u));
  EXPECT_FALSE(leq_oracle(T("A@1 x1"), T("x1"), u));
  EXPECT_TRUE(leq_oracle(T("x1"), T("x1"), u));
}

TEST(Oracle, DaimonBelowSinglePaths) {
  const auto& u = small_universe();
  for (const char* s : {"x1", "A@1 x1", "A-@1 x1", ".D@0 x1", "{D@0 = x1}",
                        "A@1 B@1 x1", "B-@1 .E@0 x1"}) {
    EXPECT_TRUE(leq_oracle(T("? x1"), T(s), u)) << s;
    EXPECT_TRUE(core::sleq(T("? x1"), T(s))) << s;
  }
}

TEST(Order, ReflexiveAndTransitiveOnSamples) {
  std::vector<Term> sample;
  for (uint64_t seed = 0; seed < 60; ++seed) sample.push_back(core::nf(gen_term(4, seed)));
  for (const auto& a : sample) EXPECT_TRUE(core::sleq(a, a)) << core::to_string(a);
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      if (!core::sleq(a, b)) continue;
      for (const auto& c : sample) {
        if (core::sleq(b, c)) EXPECT_TRUE(core::sleq(a, c));
      }
    }
  }
}

TEST(Properties, SmallRunsPass) {
  EXPECT_TRUE(check_compose_associative(100, 1).ok());
  EXPECT_TRUE(check_ccomp_below_compose(100, 2).ok());
  EXPECT_TRUE(check_nf_shape(500, 3).ok());
  EXPECT_TRUE(check_collapse_idempotent(200, 4).ok());
}

TEST(Properties, OrderOracleAgrees) {
  auto c = check_order_oracle(small_universe(), 2000);
  EXPECT_GE(c.checked, 2000);
  EXPECT_EQ(c.failed, 0) << c.first_failure;
}

}  // namespace
}  // namespace totality::testkit
