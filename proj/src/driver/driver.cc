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

#include "driver/driver.h"

#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "callgraph/extract.h"
#include "core/notation.h"
#include "json.hpp"
#include "surface/desugar.h"
#include "surface/parser.h"
#include "surface/validate.h"
#include "typing/infer.h"

namespace totality::driver {

namespace {

struct Pending {
  GroupReport rep;
  std::vector<std::pair<std::string, core::Term>> defs;
  std::string error;
};

void calls_in(const surface::Expr& e, std::set<std::string>& out) {
  if (e.kind == surface::Expr::Kind::kCall) out.insert(e.name);
  for (const auto& a : e.args) calls_in(a, out);
}

void fail(Pending& p, const std::string& msg) {
  p.error = msg;
  p.rep.verdicts.clear();
  for (const auto& n : p.rep.names) {
    scp::Verdict v;
    v.name = n;
    v.result = scp::Result::kError;
    v.b = p.rep.b;
    v.d = p.rep.d;
    v.error = msg;
    p.rep.verdicts.push_back(std::move(v));
  }
}

void run_group(Pending& p, const Config& config) {
  try {
    p.rep.graph = callgraph::build_callgraph(p.defs, p.rep.b, p.rep.d);
    callgraph::ClosureOptions opts;
    opts.subsumption = config.subsumption;
    p.rep.closure = callgraph::transitive_closure(p.rep.graph, opts);
    p.rep.verdicts = scp::check_definition_group(p.rep.names, p.rep.closure);
  } catch (const core::InternalError& e) {
    fail(p, std::string("internal error: ") + e.what());
  }
}

std::string located(const std::string& origin, surface::Pos pos,
                    const std::string& msg) {
  return origin + ":" + surface::to_string(pos) + ": " + msg;
}

}  // namespace

void check_source(std::string_view source, const std::string& origin,
                  const Config& config, Report& report) {
  auto parsed = surface::parse_program(source);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) report.errors.push_back(origin + ":" + to_string(e));
    return;
  }
  auto valid = surface::validate_restrictions(surface::desugar(*parsed.program));
  if (!valid.ok()) {
    for (const auto& e : valid.violations) {
      report.errors.push_back(origin + ":" + to_string(e));
    }
    return;
  }
  surface::Program prog = std::move(*valid.program);
  std::optional<typing::Declarations> decls;
  try {
    decls.emplace(prog);
  } catch (const typing::TypeError& e) {
    report.errors.push_back(located(origin, e.pos, e.what()));
    return;
  }

  std::map<std::string, typing::FunSig> env;
  std::map<std::string, std::set<std::string>> called;
  std::vector<Pending> pending(prog.groups.size());
  for (size_t i = 0; i < prog.groups.size(); ++i) {
    surface::Group& g = prog.groups[i];
    Pending& p = pending[i];
    for (const auto& def : g.defs) {
      p.rep.names.push_back(def.name);
      for (const auto& c : def.clauses) calls_in(c.body, called[def.name]);
    }
    p.rep.recursive = g.recursive;
    p.rep.b = g.bound_b.value_or(config.bound_b);
    p.rep.d = g.bound_d.value_or(config.bound_d);
    if (p.rep.b < 1 || p.rep.d < 0) {
      fail(p, "bounds must satisfy B >= 1 and D >= 0");
      continue;
    }
    try {
      auto typing = typing::annotate_group(g, *decls, env);
      p.rep.priorities = typing::assign_priorities(typing, *decls);
      typing::annotate_priorities(g, typing, p.rep.priorities);
      for (const auto& def : g.defs) {
        p.defs.emplace_back(def.name, callgraph::definition_term(def));
      }
    } catch (const typing::TypeError& e) {
      fail(p, located(origin, e.pos, e.what()));
    } catch (const typing::PriorityError& e) {
      fail(p, e.what());
    } catch (const core::InternalError& e) {
      fail(p, std::string("internal error: ") + e.what());
    }
  }

  std::vector<std::future<void>> jobs;
  for (auto& p : pending) {
    if (p.error.empty()) {
      jobs.push_back(std::async(std::launch::async, run_group, std::ref(p),
                                std::cref(config)));
    }
  }
  for (auto& j : jobs) j.get();

  // Earlier definitions that were not shown total, reached through calls.
  std::map<std::string, scp::Result> status;
  std::map<std::string, std::set<std::string>> unknown_deps;
  for (auto& p : pending) {
    std::set<std::string> members(p.rep.names.begin(), p.rep.names.end());
    for (auto& v : p.rep.verdicts) {
      std::set<std::string> deps;
      for (const auto& g : called[v.name]) {
        if (members.count(g) || !status.count(g)) continue;
        if (status[g] != scp::Result::kTotal) deps.insert(g);
        deps.insert(unknown_deps[g].begin(), unknown_deps[g].end());
      }
      v.depends_on_unknown.assign(deps.begin(), deps.end());
      unknown_deps[v.name] = std::move(deps);
    }
    for (const auto& v : p.rep.verdicts) status[v.name] = v.result;
    report.groups.push_back(std::move(p.rep));
  }
}

void check_file(const std::string& path, const Config& config, Report& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    report.errors.push_back(path + ": cannot read file");
    return;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  check_source(ss.str(), path, config, report);
}

std::vector<const scp::Verdict*> verdicts(const Report& report) {
  std::vector<const scp::Verdict*> out;
  for (const auto& g : report.groups) {
    for (const auto& v : g.verdicts) out.push_back(&v);
  }
  return out;
}

int exit_code(const Report& report) {
  if (!report.errors.empty()) return 2;
  int code = 0;
  for (const auto* v : verdicts(report)) {
    if (v->result == scp::Result::kError) return 2;
    if (v->result == scp::Result::kUnknown) code = 1;
  }
  return code;
}

namespace {

std::string group_label(const GroupReport& g) {
  std::string s;
  for (const auto& n : g.names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

nlohmann::json edges_json(const callgraph::CallGraph& g) {
  auto arr = nlohmann::json::array();
  for (const auto& e : g.edges) {
    arr.push_back({{"caller", e.caller()},
                   {"callee", e.callee()},
                   {"term", core::to_string(e.term())}});
  }
  return arr;
}

std::string render_json(const Report& report, unsigned flags) {
  nlohmann::json doc;
  auto defs = nlohmann::json::array();
  auto prios = nlohmann::json::array();
  auto graphs = nlohmann::json::array();
  size_t edges = 0;
  size_t closure_edges = 0;
  for (const auto& g : report.groups) {
    for (const auto& v : g.verdicts) {
      nlohmann::json d = {{"name", v.name},
                          {"result", scp::to_string(v.result)},
                          {"bounds", {{"B", g.b}, {"D", g.d}}}};
      auto reasons = nlohmann::json::array();
      for (const auto& r : v.reasons) {
        reasons.push_back({{"loop", core::to_string(r.loop.term())},
                           {"caller", r.loop.caller()},
                           {"explanation", r.explanation}});
      }
      d["reasons"] = reasons;
      d["depends_on_unknown"] = v.depends_on_unknown;
      if (!v.error.empty()) d["error"] = v.error;
      defs.push_back(d);
    }
    nlohmann::json pm = nlohmann::json::object();
    for (const auto& [k, p] : g.priorities.of) pm[k] = p;
    prios.push_back({{"group", g.names}, {"map", pm}});
    if (flags & (kDumpCallgraph | kDumpClosure)) {
      nlohmann::json entry = {{"group", g.names}};
      if (flags & kDumpCallgraph) entry["callgraph"] = edges_json(g.graph);
      if (flags & kDumpClosure) entry["closure"] = edges_json(g.closure);
      graphs.push_back(entry);
    }
    edges += g.graph.edges.size();
    closure_edges += g.closure.edges.size();
  }
  doc["definitions"] = defs;
  doc["priorities"] = prios;
  doc["stats"] = {{"groups", report.groups.size()},
                  {"definitions", defs.size()},
                  {"edges", edges},
                  {"closure_edges", closure_edges}};
  doc["errors"] = report.errors;
  if (flags & (kDumpCallgraph | kDumpClosure)) doc["graphs"] = graphs;
  return doc.dump(2) + "\n";
}

std::string bounds(const GroupReport& g) {
  return "B=" + std::to_string(g.b) + " D=" + std::to_string(g.d);
}

}  // namespace

std::string render(const Report& report, unsigned flags) {
  if (flags & kRenderJson) return render_json(report, flags);
  std::string out;
  for (const auto& e : report.errors) out += "ERROR " + e + "\n";
  for (const auto& g : report.groups) {
    if (flags & kDumpPriorities) {
      out += "-- priorities of " + group_label(g) + "\n" + to_string(g.priorities);
    }
    if (flags & kDumpCallgraph) {
      out += "-- call graph of " + group_label(g) + " (" + bounds(g) + ")\n" +
             callgraph::to_string(g.graph);
    }
    if (flags & kDumpClosure) {
      out += "-- closure of " + group_label(g) + " (" + bounds(g) + ")\n" +
             callgraph::to_string(g.closure);
    }
    for (const auto& v : g.verdicts) {
      switch (v.result) {
        case scp::Result::kTotal:
          out += "TOTAL " + v.name + "\n";
          break;
        case scp::Result::kUnknown:
          out += "UNKNOWN " + v.name + ": " +
                 core::to_string(v.reasons.front().loop.term()) + "\n";
          for (const auto& r : v.reasons) {
            out += "  failing loop " + to_string(r.loop) + "\n    " +
                   r.explanation + "\n";
          }
          break;
        case scp::Result::kError:
          out += "ERROR " + v.name + ": " + v.error + "\n";
          break;
      }
      if (!v.depends_on_unknown.empty()) {
        std::string deps;
        for (const auto& d : v.depends_on_unknown) deps += (deps.empty() ? "" : ", ") + d;
        out += "  warning: " + v.name + " depends on definitions not shown total: " +
               deps + "\n";
      }
    }
  }
  return out;
}

}  // namespace totality::driver
