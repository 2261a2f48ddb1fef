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

#ifndef TOTALITY_CORE_TERM_H_
#define TOTALITY_CORE_TERM_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/weight.h"

namespace totality::core {

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind {
  kParam,
  kConstr,
  kConstrDual,
  kProject,
  kRecord,
  kFunApp,
  kDaimon,
  kApprox,
  kSum,
};

class Node;
using Term = std::shared_ptr<const Node>;

// Immutable term node. Build through the factories below, which keep every
// Sum at the root (multilinearity) and every Sum flat, sorted and
// duplicate-free.
class Node {
 public:
  Kind kind;
  std::string name;
  int priority = 0;
  int index = 0;
  Weight weight;
  std::vector<std::string> fields;
  std::vector<Term> kids;
  int size = 1;
  bool has_fun = false;

  const Term& kid() const { return kids.front(); }
};

Term param(int index);
Term constr(const std::string& name, int priority, const Term& t);
Term constr_dual(const std::string& name, int priority, const Term& t);
Term project(const std::string& name, int priority, const Term& t);
Term record(int priority, std::vector<std::pair<std::string, Term>> fields);
Term funapp(const std::string& name, std::vector<Term> args);
Term daimon(const Term& t);
Term approx(const Weight& w, const Term& t);
Term sum(std::vector<Term> terms);
Term zero();

// Index of the opaque leaf standing for an unknown nullary value.
inline constexpr int kUnknownLeaf = 0;

int compare(const Term& a, const Term& b);
inline bool equal(const Term& a, const Term& b) { return compare(a, b) == 0; }
struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return compare(a, b) < 0;
  }
};

inline bool is_zero(const Term& t) {
  return t->kind == Kind::kSum && t->kids.empty();
}
// The summands of t: t itself unless t is a Sum.
std::vector<Term> summands(const Term& t);

// Destructor heads: C- and .D.
inline bool is_destructor(const Term& t) {
  return t->kind == Kind::kConstrDual || t->kind == Kind::kProject;
}

// Rebuilds a unary node (Constr, ConstrDual, Project, Daimon, Approx) of the
// same shape as `like` over a new child.
Term rebuild_unary(const Node& like, const Term& t);

int count_funapps(const Term& t);

}  // namespace totality::core

#endif  // TOTALITY_CORE_TERM_H_
