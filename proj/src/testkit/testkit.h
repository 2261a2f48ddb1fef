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

// Random term generators and a brute-force decision procedure for the term
// order on a finite universe. Used by the tests and the acceptance binary.

#ifndef TOTALITY_TESTKIT_TESTKIT_H_
#define TOTALITY_TESTKIT_TESTKIT_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "core/term.h"

namespace totality::testkit {

using core::Term;

// Random term with at most `size` nodes. Deterministic in `seed`.
Term gen_term(int size, uint64_t seed);

// Same, drawing from a caller-owned engine.
Term gen_term(int size, std::mt19937_64& rng);

// Random normal form with exactly one occurrence of `fname`, applied to
// `arity` function-free arguments over x1..x`arity`. The shape of the call
// terms found in call graphs.
Term gen_call(const std::string& fname, int arity, int size, std::mt19937_64& rng);

struct UniverseConfig {
  int max_nodes = 4;
  // Constructors are A and B; record fields are D and E.
  int constructor_priority = 1;
  int field_priority = 0;
  // Weights allowed under an approximation node. Empty selects every
  // single-component weight over priorities {0,1} with values in
  // {-2,-1,1,2,inf}, plus the zero weight.
  std::vector<core::Weight> weights;
  // Cap on enumerated terms; exceeding it throws core::InternalError.
  size_t max_terms = 200000;
};

// Every term of the universe, the one-step relation induced by the
// generators of the order, and its reflexive-transitive closure restricted to
// the universe.
class TermUniverse {
 public:
  explicit TermUniverse(UniverseConfig config = {});

  const UniverseConfig& config() const { return config_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t edge_count() const { return edges_; }
  bool contains(const Term& t) const { return index_.count(t) != 0; }

  // Distinct normal forms of the universe with at most `max_nodes` nodes, no
  // approximation above a call and not 0. The query population.
  std::vector<Term> normal_forms(int max_nodes) const;

  enum class Answer { kLeq, kNotFound, kOutside };
  // kLeq: s <= t is derivable inside the universe. kNotFound: it is not,
  // which proves nothing when a derivation needs larger terms. kOutside:
  // one of the terms is not in the universe.
  Answer leq(const Term& s, const Term& t) const;

  // Terms reachable from `s` by one generator step.
  std::vector<Term> successors(const Term& s) const;

 private:
  void enumerate();
  void build_edges();
  void close();
  const std::vector<uint64_t>& reach_of(int i) const;

  UniverseConfig config_;
  std::vector<Term> terms_;
  std::map<Term, int, core::TermLess> index_;
  std::vector<std::vector<int>> succ_;
  size_t edges_ = 0;
  std::vector<int> scc_;
  // Reachable members, one bitset per strongly connected component.
  std::vector<std::vector<uint64_t>> reach_;
};

// Oracle entry point: true only if s <= t is derivable within `u`.
bool leq_oracle(const Term& s, const Term& t, const TermUniverse& u);

struct PropertyCounts {
  explicit PropertyCounts(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  long checked = 0;
  long failed = 0;
  // Pairs the oracle could not decide.
  long skipped = 0;
  std::string first_failure;
  bool ok() const { return failed == 0; }
};

struct PropertyConfig {
  uint64_t seed = 20260101;
  long order_pairs = 10000;
  long compose_triples = 1000;
  long ccomp_pairs = 1000;
  long nf_terms = 10000;
  long collapse_terms = 2000;
  // Corpus programs for the closure idempotence check.
  std::vector<std::string> corpus_files;
};

// The sleq/oracle agreement on the universe population.
PropertyCounts check_order_oracle(const TermUniverse& u, long min_pairs);
PropertyCounts check_compose_associative(long n, uint64_t seed);
PropertyCounts check_ccomp_below_compose(long n, uint64_t seed);
PropertyCounts check_nf_shape(long n, uint64_t seed);
PropertyCounts check_closure_idempotent(const std::vector<std::string>& files);
PropertyCounts check_collapse_idempotent(long n, uint64_t seed);

std::vector<PropertyCounts> run_property_suite(const PropertyConfig& config);

}  // namespace totality::testkit

#endif  // TOTALITY_TESTKIT_TESTKIT_H_
