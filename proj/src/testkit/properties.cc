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

#include <exception>

#include "callgraph/call.h"
#include "callgraph/closure.h"
#include "core/collapse.h"
#include "core/compose.h"
#include "core/normalize.h"
#include "core/notation.h"
#include "core/order.h"
#include "driver/driver.h"
#include "testkit/testkit.h"

namespace totality::testkit {

namespace {

void fail(PropertyCounts& c, const std::string& what) {
  if (c.failed++ == 0) c.first_failure = what;
}

std::string show(const Term& t) { return core::to_string(t); }

}  // namespace

PropertyCounts check_order_oracle(const TermUniverse& u, long min_pairs) {
  PropertyCounts c{"sleq agrees with the order oracle"};
  const int max_nodes = std::min(3, u.config().max_nodes);
  const auto pop = u.normal_forms(max_nodes);
  for (const auto& s : pop) {
    for (const auto& t : pop) {
      const bool oracle = leq_oracle(s, t, u);
      const bool fast = core::sleq(s, t);
      ++c.checked;
      if (oracle && !fast) {
        fail(c, "oracle derives " + show(s) + " <= " + show(t) + " but sleq rejects it");
      } else if (fast && !oracle) {
        ++c.skipped;
      }
    }
  }
  if (c.checked < min_pairs) {
    fail(c, "only " + std::to_string(c.checked) + " pairs in the population");
  }
  return c;
}

PropertyCounts check_compose_associative(long n, uint64_t seed) {
  PropertyCounts c{"compose is associative"};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < n; ++i) {
    Term a = gen_call("f", 2, 3, rng);
    Term b = gen_call("f", 2, 3, rng);
    Term d = gen_call("f", 2, 3, rng);
    Term left = core::nf(core::compose_unnormalized(
        core::compose_unnormalized(a, b, "f"), d, "f"));
    Term right = core::nf(core::compose_unnormalized(
        a, core::compose_unnormalized(b, d, "f"), "f"));
    ++c.checked;
    if (!core::equal(left, right)) {
      fail(c, show(a) + " ; " + show(b) + " ; " + show(d) + ": " + show(left) +
                  " vs " + show(right));
      continue;
    }
    // Composing normal forms step by step can only lose zeros.
    Term stepwise = core::compose(a, core::compose(b, d, "f"), "f");
    if (!core::sleq(stepwise, left)) {
      fail(c, "stepwise " + show(stepwise) + " not below " + show(left));
    }
  }
  return c;
}

namespace {

bool has_wide_record(const Term& t) {
  if (t->kind == core::Kind::kRecord && t->kids.size() > 1) return true;
  for (const auto& k : t->kids) {
    if (has_wide_record(k)) return true;
  }
  return false;
}

}  // namespace

PropertyCounts check_ccomp_below_compose(long n, uint64_t seed) {
  PropertyCounts c{"collapsed composition lies below composition"};
  std::mt19937_64 rng(seed);
  while (c.checked < n) {
    const int b = 1 + static_cast<int>(rng() % 2);
    const int d = static_cast<int>(rng() % 3);
    auto draw = [&] {
      for (;;) {
        auto cs = callgraph::split_calls(
            "f", callgraph::collapse(b, d, gen_call("f", 2, 4, rng)));
        if (!cs.empty()) return cs[rng() % cs.size()];
      }
    };
    const callgraph::Call alpha = draw();
    const callgraph::Call beta = draw();
    Term exact = core::compose(alpha.term(), beta.term(), "f");
    // Collapsing a record of several fields yields a sum that is below the
    // record only as a whole; the summand-wise order cannot see that.
    if (has_wide_record(exact)) {
      ++c.skipped;
      continue;
    }
    std::vector<Term> parts;
    for (const auto& k : callgraph::ccomp(b, d, beta, alpha)) parts.push_back(k.term());
    Term approx = core::sum(std::move(parts));
    ++c.checked;
    if (!core::sleq(approx, exact)) {
      fail(c, "B=" + std::to_string(b) + " D=" + std::to_string(d) + " " +
                  show(beta.term()) + " after " + show(alpha.term()) + ": " +
                  show(approx) + " not below " + show(exact));
    }
  }
  return c;
}

PropertyCounts check_nf_shape(long n, uint64_t seed) {
  PropertyCounts c{"nf yields normal forms"};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < n; ++i) {
    Term t = gen_term(1 + static_cast<int>(rng() % 10), rng);
    Term v = core::nf(t);
    ++c.checked;
    if (!core::is_normal_form(v)) {
      fail(c, show(t) + " -> " + show(v) + " is not a normal form");
    } else if (!core::equal(core::nf(v), v)) {
      fail(c, show(t) + " -> " + show(v) + " is not a fixpoint of nf");
    }
  }
  return c;
}

PropertyCounts check_closure_idempotent(const std::vector<std::string>& files) {
  PropertyCounts c{"closure is idempotent"};
  for (const auto& path : files) {
    for (int b = 1; b <= 2; ++b) {
      for (int d = 0; d <= 2; ++d) {
        driver::Config cfg;
        cfg.bound_b = b;
        cfg.bound_d = d;
        driver::Report rep;
        driver::check_file(path, cfg, rep);
        if (!rep.errors.empty()) {
          fail(c, rep.errors.front());
          continue;
        }
        for (const auto& g : rep.groups) {
          if (!g.recursive) continue;
          auto again = callgraph::transitive_closure(g.closure);
          ++c.checked;
          if (again.edges != g.closure.edges) {
            fail(c, path + ": closure of " + g.names.front() + " grows from " +
                        std::to_string(g.closure.edges.size()) + " to " +
                        std::to_string(again.edges.size()) + " edges");
          }
        }
      }
    }
  }
  return c;
}

PropertyCounts check_collapse_idempotent(long n, uint64_t seed) {
  PropertyCounts c{"weight and depth collapse are idempotent"};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < n; ++i) {
    Term t = core::nf(gen_term(1 + static_cast<int>(rng() % 9), rng));
    const int b = 1 + static_cast<int>(rng() % 3);
    const int d = static_cast<int>(rng() % 3);
    Term w = core::collapse_weights(b, t);
    Term k = core::collapse_depth(d, t);
    ++c.checked;
    if (!core::equal(core::collapse_weights(b, w), w)) {
      fail(c, "weights B=" + std::to_string(b) + " " + show(t));
    } else if (!core::equal(core::collapse_depth(d, k), k)) {
      fail(c, "depth D=" + std::to_string(d) + " " + show(t));
    }
  }
  return c;
}

std::vector<PropertyCounts> run_property_suite(const PropertyConfig& config) {
  std::vector<PropertyCounts> out;
  auto guarded = [&](const char* name, auto&& run) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      PropertyCounts c{name};
      fail(c, std::string("exception: ") + e.what());
      out.push_back(c);
    }
  };
  guarded("sleq agrees with the order oracle", [&] {
    TermUniverse u;
    return check_order_oracle(u, config.order_pairs);
  });
  guarded("compose is associative", [&] {
    return check_compose_associative(config.compose_triples, config.seed);
  });
  guarded("collapsed composition lies below composition", [&] {
    return check_ccomp_below_compose(config.ccomp_pairs, config.seed + 1);
  });
  guarded("nf yields normal forms",
          [&] { return check_nf_shape(config.nf_terms, config.seed + 2); });
  guarded("closure is idempotent",
          [&] { return check_closure_idempotent(config.corpus_files); });
  guarded("weight and depth collapse are idempotent", [&] {
    return check_collapse_idempotent(config.collapse_terms, config.seed + 3);
  });
  return out;
}

}  // namespace totality::testkit
