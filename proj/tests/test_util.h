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

#ifndef TOTALITY_TESTS_TEST_UTIL_H_
#define TOTALITY_TESTS_TEST_UTIL_H_

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/notation.h"
#include "driver/driver.h"
#include "surface/desugar.h"
#include "surface/parser.h"
#include "surface/validate.h"
#include "typing/infer.h"
#include "typing/priorities.h"

namespace totality::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(TOTALITY_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Front end plus typing and priorities for every group.
inline surface::Program annotated(const std::string& src) {
  auto parsed = surface::parse_program(src);
  if (!parsed.ok()) throw std::runtime_error("parse error");
  auto valid = surface::validate_restrictions(surface::desugar(*parsed.program));
  if (!valid.ok()) throw std::runtime_error("invalid program");
  surface::Program p = *valid.program;
  typing::Declarations decls(p);
  std::map<std::string, typing::FunSig> env;
  for (auto& g : p.groups) {
    auto t = typing::annotate_group(g, decls, env);
    typing::annotate_priorities(g, t, typing::assign_priorities(t, decls));
  }
  return p;
}

inline const surface::Definition& find_def(const surface::Program& p,
                                           const std::string& name) {
  for (const auto& g : p.groups) {
    for (const auto& d : g.defs) {
      if (d.name == name) return d;
    }
  }
  throw std::runtime_error("no definition " + name);
}

inline driver::Report check(const std::string& file, int b, int d,
                            bool subsumption = true) {
  driver::Config c;
  c.bound_b = b;
  c.bound_d = d;
  c.subsumption = subsumption;
  driver::Report r;
  driver::check_file(corpus_path(file), c, r);
  return r;
}

inline const driver::GroupReport& group_of(const driver::Report& r,
                                           const std::string& name) {
  for (const auto& g : r.groups) {
    for (const auto& n : g.names) {
      if (n == name) return g;
    }
  }
  throw std::runtime_error("no group " + name);
}

inline scp::Result result_of(const driver::Report& r, const std::string& name) {
  for (const auto* v : driver::verdicts(r)) {
    if (v->name == name) return v->result;
  }
  throw std::runtime_error("no verdict " + name);
}

inline bool has_edge(const callgraph::CallGraph& g, const std::string& term) {
  const core::Term t = core::parse_term(term);
  for (const auto& e : g.edges) {
    if (core::equal(e.term(), t)) return true;
  }
  return false;
}

}  // namespace totality::testing

#endif  // TOTALITY_TESTS_TEST_UTIL_H_
