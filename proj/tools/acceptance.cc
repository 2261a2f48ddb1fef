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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 iff all pass.
//
//   totality_acceptance [--corpus DIR] [--seed N] [-v]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "callgraph/closure.h"
#include "core/branch.h"
#include "core/notation.h"
#include "driver/driver.h"
#include "scp/scp.h"
#include "testkit/testkit.h"

namespace {

using totality::callgraph::Call;
using totality::callgraph::CallGraph;
using totality::core::Weight;
using totality::core::WeightMode;
using totality::driver::GroupReport;
using totality::driver::Report;
using totality::scp::Result;

constexpr double kBudgetSeconds = 5.0;

std::string g_corpus = TOTALITY_CORPUS_DIR;
uint64_t g_seed = 20260101;

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string weight_str(const Weight& w) {
  std::string s = "{";
  for (const auto& [p, v] : w.components()) {
    if (s.size() > 1) s += ",";
    s += std::to_string(p) + ":" + (v.is_inf() ? "inf" : std::to_string(v.value()));
  }
  return s + "}";
}

Report run(const std::string& file, int b, int d, bool subsumption = true) {
  totality::driver::Config c;
  c.bound_b = b;
  c.bound_d = d;
  c.subsumption = subsumption;
  Report r;
  totality::driver::check_file(g_corpus + "/" + file, c, r);
  return r;
}

const GroupReport* group(const Report& r, const std::string& name) {
  for (const auto& g : r.groups) {
    for (const auto& n : g.names) {
      if (n == name) return &g;
    }
  }
  return nullptr;
}

const totality::scp::Verdict* verdict(const Report& r, const std::string& name) {
  for (const auto* v : totality::driver::verdicts(r)) {
    if (v->name == name) return v;
  }
  return nullptr;
}

void expect_result(Check& c, const std::string& file, const std::string& name,
                   int b, int d, Result want) {
  const Report r = run(file, b, d);
  const auto* v = verdict(r, name);
  const std::string where =
      name + " at (" + std::to_string(b) + "," + std::to_string(d) + ")";
  if (v == nullptr) {
    c.expect(false, where + ": no verdict");
    return;
  }
  c.expect(v->result == want, where + ": got " + totality::scp::to_string(v->result) +
                                  ", want " + totality::scp::to_string(want));
}

const Call* find_edge(const CallGraph& g, const std::string& term) {
  const auto t = totality::core::parse_term(term);
  for (const auto& e : g.edges) {
    if (totality::core::equal(e.term(), t)) return &e;
  }
  return nullptr;
}

Weight spine_weight(const Call& c) {
  return totality::core::branch_weight(c.spine(), WeightMode::kDual);
}

void criterion_nats(Check& c) {
  expect_result(c, "nats.ch", "nats", 1, 1, Result::kTotal);
  expect_result(c, "nats.ch", "nats", 1, 0, Result::kTotal);
  const Report r = run("nats.ch", 1, 1);
  const auto* g = group(r, "nats");
  c.expect(g != nullptr, "nats group missing");
  if (g == nullptr) return;
  c.expect(g->closure.edges.size() == 2,
           "closure size " + std::to_string(g->closure.edges.size()) + ", want 2");
  c.expect(find_edge(g->closure, "{Tail@0 = nats(Succ@1 x1)}") != nullptr,
           "sigma missing from closure");
  const Call* rho =
      find_edge(g->closure, "{Tail@0 = <{0:-1}> nats(Succ@1 <{1:inf}> x1)}");
  c.expect(rho != nullptr, "rho missing from closure");
}

void criterion_length(Check& c) {
  expect_result(c, "length.ch", "length", 1, 0, Result::kTotal);
  const Report r = run("length.ch", 1, 0);
  const auto* g = group(r, "length");
  if (g == nullptr) return c.expect(false, "length group missing");
  const Call* rho = find_edge(g->closure, "<{1:-1}> length(<{0:-1,1:-1}> x1)");
  c.expect(rho != nullptr, "rho missing from closure");
  if (rho == nullptr) return;
  const auto c2 = totality::scp::check_condition2(*rho);
  c.expect(c2.has_value() && c2->priority == 1, "condition 2 does not fire at p=1");
  c.expect(!totality::scp::check_condition1(*rho), "condition 1 fires");
}

void criterion_bad_s(Check& c) {
  for (int b = 1; b <= 2; ++b) {
    for (int d = 0; d <= 2; ++d) expect_result(c, "bad_s.ch", "bad_s", b, d, Result::kUnknown);
  }
  const Report full = run("bad_s.ch", 1, 1, /*subsumption=*/false);
  const auto* g = group(full, "bad_s");
  if (g == nullptr) return c.expect(false, "bad_s group missing");
  c.expect(g->closure.edges.size() == 5,
           "closure size " + std::to_string(g->closure.edges.size()) + ", want 5");

  // rho11 = sigma1 * sigma1 and rho21 = sigma2 * sigma1, recomputed here.
  const Call* s1 = nullptr;
  const Call* s2 = nullptr;
  for (const auto& e : g->graph.edges) {
    const std::string s = totality::callgraph::to_string(e);
    if (s.find("Head@0") != std::string::npos) s1 = &e;
    if (s.find("Tail@0") != std::string::npos) s2 = &e;
  }
  if (s1 == nullptr || s2 == nullptr) return c.expect(false, "sigma1/sigma2 missing");
  std::vector<Call> rhos;
  for (const auto& k : totality::callgraph::ccomp(1, 1, *s1, *s1)) rhos.push_back(k);
  for (const auto& k : totality::callgraph::ccomp(1, 1, *s1, *s2)) rhos.push_back(k);
  c.expect(find_edge(g->closure, "{Head@0 = <{0:-1,1:-1}> bad_s()}") != nullptr,
           "rho11 missing from closure");
  c.expect(find_edge(g->closure, "{Tail@0 = <{0:-1,1:-1}> bad_s()}") != nullptr,
           "rho21 missing from closure");

  const Report pruned = run("bad_s.ch", 1, 1);
  const auto* v = verdict(pruned, "bad_s");
  if (v == nullptr) return c.expect(false, "bad_s verdict missing");
  bool named = false;
  for (const auto& f : v->reasons) {
    for (const auto& k : rhos) named = named || f.loop == k;
  }
  c.expect(named, "diagnostics name neither rho11 nor rho21");
}

void criterion_sums(Check& c) {
  expect_result(c, "sums.ch", "sums", 1, 1, Result::kTotal);
  expect_result(c, "sums.ch", "sums", 1, 0, Result::kUnknown);
  const Report r = run("sums.ch", 1, 1);
  const auto* g = group(r, "sums");
  if (g == nullptr) return c.expect(false, "sums group missing");
  struct Shape {
    const char* name;
    std::regex re;
    int condition;
  };
  const std::vector<Shape> shapes = {
      {"rho1",
       std::regex(R"(\{Tail@0 = <\{0:-1\}> sums\(Zero@\d .*, <\{0:-1\}> \.Tail@0 x2\)\})"),
       1},
      {"rho2",
       std::regex(R"(sums\(\? .*, \{Head@0 = <\{(0:-1,)?1:-1\}> \.Head@0 x2; )"
                  R"(Tail@0 = \.Tail@0 x2\}\))"),
       2},
      {"rho3",
       std::regex(R"(\{Tail@0 = <\{0:-1\}> sums\(\? .*, \{Head@0 = <\{0:-1,1:-1\}> )"
                  R"(\.Tail@0 x2; Tail@0 = <\{0:-1\}> \.Tail@0 x2\}\)\})"),
       1},
  };
  for (const auto& s : shapes) {
    bool found = false;
    for (const auto& e : g->closure.edges) {
      const std::string text = totality::core::to_string(e.term());
      if (!std::regex_match(text, s.re)) continue;
      found = true;
      c.note(std::string(s.name) + " = " + text);
      c.expect(totality::scp::is_checked_loop(e, 1, 1),
               std::string(s.name) + " is not a coherent loop");
      const bool passes = s.condition == 1 ? totality::scp::check_condition1(e).has_value()
                                           : totality::scp::check_condition2(e).has_value();
      c.expect(passes, std::string(s.name) + " fails condition " +
                           std::to_string(s.condition));
    }
    c.expect(found, std::string("no loop of shape ") + s.name);
  }
}

void criterion_bounds(Check& c, const char* file, const char* name, int b_ok,
                      int d_ok, int b_bad, int d_bad) {
  expect_result(c, file, name, b_ok, d_ok, Result::kTotal);
  expect_result(c, file, name, b_bad, d_bad, Result::kUnknown);
}

void criterion_nats_list(Check& c) {
  expect_result(c, "nats_list.ch", "nats_list", 1, 1, Result::kUnknown);
  const Report r = run("nats_list.ch", 1, 1);
  const auto* g = group(r, "nats_list");
  if (g == nullptr) return c.expect(false, "nats_list group missing");
  bool found = false;
  for (const auto& e : g->closure.edges) {
    if (spine_weight(e) != Weight{{0, -1}, {1, -2}}) continue;
    found = true;
    c.expect(!totality::scp::check_condition1(e), "condition 1 fires on rho");
    c.expect(!totality::scp::check_condition2(e), "condition 2 fires on rho");
    for (const auto& br : totality::core::branches(e.args().at(0))) {
      const Weight w = totality::core::branch_weight(br.items, WeightMode::kStandard);
      c.expect(w == Weight{{3, totality::core::ZInf::inf()}},
               "argument weight " + weight_str(w) + ", want {3:inf}");
    }
  }
  c.expect(found, "no loop with spine weight {0:-1,1:-2}");
}

void criterion_half(Check& c) {
  expect_result(c, "half.ch", "half1", 2, 2, Result::kTotal);
  expect_result(c, "half.ch", "half2", 2, 2, Result::kTotal);
}

void criterion_magic(Check& c) {
  const Report r = run("bad_s.ch", 2, 2);
  const auto* ll = verdict(r, "lower_left");
  const auto* m = verdict(r, "magic");
  if (ll == nullptr || m == nullptr) return c.expect(false, "verdicts missing");
  c.expect(ll->result == Result::kTotal, "lower_left not Total");
  c.expect(m->depends_on_unknown == std::vector<std::string>{"bad_s"},
           "magic not flagged via bad_s");
}

void criterion_properties(Check& c) {
  totality::testkit::PropertyConfig config;
  config.seed = g_seed;
  for (const auto& f : std::filesystem::directory_iterator(g_corpus)) {
    if (f.path().extension() == ".ch") config.corpus_files.push_back(f.path().string());
  }
  std::sort(config.corpus_files.begin(), config.corpus_files.end());
  const auto counts = totality::testkit::run_property_suite(config);
  const long minimum[] = {10000, 1000, 1000, 10000, 1, 1};
  for (size_t i = 0; i < counts.size(); ++i) {
    const auto& p = counts[i];
    char line[256];
    std::snprintf(line, sizeof(line), "%-46s checked %6ld failed %ld skipped %ld",
                  p.name.c_str(), p.checked, p.failed, p.skipped);
    c.note(line);
    c.expect(p.ok(), p.name + ": " + p.first_failure);
    if (i < std::size(minimum)) {
      c.expect(p.checked >= minimum[i],
               p.name + ": only " + std::to_string(p.checked) + " checked");
    }
  }
  c.expect(counts.size() == 6, "property suite incomplete");
  c.expect(!config.corpus_files.empty(), "no corpus programs found");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool verbose = false;
  app.add_option("--corpus", g_corpus, "Directory with the example programs");
  app.add_option("--seed", g_seed, "Seed of the property suite");
  app.add_flag("-v,--verbose", verbose, "Print details of passing criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"nats", criterion_nats},
      {"length", criterion_length},
      {"bad_s", criterion_bad_s},
      {"sums", criterion_sums},
      {"C1/C2 needs D>0",
       [](Check& c) { criterion_bounds(c, "incompatible.ch", "f", 1, 1, 1, 0); }},
      {"Fst/Snd swap needs D>0",
       [](Check& c) { criterion_bounds(c, "swap.ch", "f", 1, 1, 1, 0); }},
      {"mutual s1/s2 needs B=2",
       [](Check& c) {
         criterion_bounds(c, "mutual.ch", "s1", 2, 0, 1, 0);
         criterion_bounds(c, "mutual.ch", "s2", 2, 0, 1, 0);
       }},
      {"nats_list", criterion_nats_list},
      {"half1/half2", criterion_half},
      {"lower_left/magic", criterion_magic},
      {"property suite", criterion_properties},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char budget[64];
    std::snprintf(budget, sizeof(budget), "%.2fs over the %.0fs budget", secs,
                  kBudgetSeconds);
    c.expect(secs < kBudgetSeconds, budget);
    std::printf("%s %2zu %-24s (%.2fs)\n", c.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first, secs);
    for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
    if (verbose || i + 1 == criteria.size()) {
      for (const auto& n : c.notes()) std::printf("       %s\n", n.c_str());
    }
    if (!c.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
