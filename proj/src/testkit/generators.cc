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

#include <utility>
#include <vector>

#include "core/normalize.h"
#include "testkit/testkit.h"

namespace totality::testkit {

using core::Weight;
using core::ZInf;

namespace {

struct Sym {
  const char* name;
  int priority;
};

// Constructors and fields at both parities.
constexpr Sym kCtors[] = {{"A", 1}, {"B", 1}, {"C", 3}};
constexpr Sym kFields[] = {{"D", 0}, {"E", 0}, {"F", 2}};

int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

Weight random_weight(std::mt19937_64& rng) {
  Weight w;
  const int n = pick(rng, 3);
  for (int i = 0; i < n; ++i) {
    const int p = pick(rng, 4);
    const int v = pick(rng, 6) - 2;
    w.set(p, v == 3 ? ZInf::inf() : ZInf(v));
  }
  return w;
}

Term leaf(std::mt19937_64& rng, int params, bool allow_zero) {
  if (allow_zero && pick(rng, 10) == 0) return core::zero();
  return core::param(1 + pick(rng, params));
}

// Records use fields of one priority, like the typed terms.
Term random_record(std::mt19937_64& rng, std::vector<Term> kids) {
  const int prio = pick(rng, 2) == 0 ? 0 : 2;
  std::vector<std::pair<std::string, Term>> fs;
  const char* names[] = {"D", "E", "G"};
  for (size_t i = 0; i < kids.size(); ++i) fs.emplace_back(names[i], kids[i]);
  return core::record(prio, std::move(fs));
}

// Budget-bounded generator of sum-free terms. `fun` allows function calls,
// `zeros` allows 0 leaves.
Term gen(int budget, std::mt19937_64& rng, int params, bool fun, bool zeros) {
  if (budget <= 1) return leaf(rng, params, zeros);
  const int k = pick(rng, 20);
  const int rest = budget - 1;
  if (k < 4) {
    const Sym& c = kCtors[pick(rng, 3)];
    return core::constr(c.name, c.priority, gen(rest, rng, params, fun, zeros));
  }
  if (k < 6) {
    const Sym& c = kCtors[pick(rng, 3)];
    return core::constr_dual(c.name, c.priority, gen(rest, rng, params, fun, zeros));
  }
  if (k < 8) {
    const Sym& f = kFields[pick(rng, 3)];
    return core::project(f.name, f.priority, gen(rest, rng, params, fun, zeros));
  }
  if (k < 10) {
    std::vector<Term> kids;
    int left = rest;
    const int n = left >= 2 ? 1 + pick(rng, 2) : 1;
    for (int i = 0; i < n; ++i) {
      const int share = i + 1 == n ? left : 1 + pick(rng, left - (n - i - 1));
      kids.push_back(gen(share, rng, params, fun, zeros));
      left -= share;
    }
    return random_record(rng, std::move(kids));
  }
  if (k < 12 && fun) {
    const int n = 1 + (rest >= 2 ? pick(rng, 2) : 0);
    std::vector<Term> args;
    int left = rest;
    for (int i = 0; i < n; ++i) {
      const int share = i + 1 == n ? left : 1 + pick(rng, left - (n - i - 1));
      args.push_back(gen(share, rng, params, fun, zeros));
      left -= share;
    }
    return core::funapp(pick(rng, 2) == 0 ? "f" : "g", std::move(args));
  }
  if (k < 14) return core::daimon(gen(rest, rng, params, fun, zeros));
  if (k < 17) return core::approx(random_weight(rng), gen(rest, rng, params, fun, zeros));
  const Sym& c = kCtors[pick(rng, 3)];
  return core::constr(c.name, c.priority, gen(rest, rng, params, fun, zeros));
}

}  // namespace

Term gen_term(int size, std::mt19937_64& rng) {
  // Sums only at the root: below a node they would distribute and grow.
  if (size >= 2 && pick(rng, 8) == 0) {
    const int left = 1 + pick(rng, size - 1);
    return core::sum({gen(left, rng, 2, true, true), gen(size - left, rng, 2, true, true)});
  }
  return gen(size, rng, 2, true, true);
}

Term gen_term(int size, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gen_term(size, rng);
}

Term gen_call(const std::string& fname, int arity, int size, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) {
      args.push_back(gen(1 + pick(rng, size), rng, arity, false, false));
    }
    Term t = core::funapp(fname, std::move(args));
    // Output context: what a definition body can put around a call.
    const int depth = pick(rng, 4);
    for (int i = 0; i < depth; ++i) {
      const int k = pick(rng, 5);
      if (k == 0) {
        const Sym& c = kCtors[pick(rng, 3)];
        t = core::constr(c.name, c.priority, t);
      } else if (k == 1) {
        // Extracted calls keep one field per record.
        t = random_record(rng, {t});
      } else if (k == 2) {
        t = core::approx(random_weight(rng), t);
      } else if (k == 3) {
        t = core::daimon(t);
      } else {
        const Sym& f = kFields[pick(rng, 2)];
        t = core::record(f.priority, {{f.name, t}});
      }
    }
    Term n = core::nf(t);
    auto parts = core::summands(n);
    if (parts.empty()) continue;
    Term c = parts[pick(rng, static_cast<int>(parts.size()))];
    if (core::count_funapps(c) == 1) return c;
  }
}

}  // namespace totality::testkit
