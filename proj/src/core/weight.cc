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

#include "core/weight.h"

#include <set>

namespace totality::core {

std::string ZInf::str() const {
  return inf_ ? std::string("inf") : std::to_string(v_);
}

Weight::Weight(std::initializer_list<std::pair<const int, ZInf>> init) {
  for (const auto& [p, v] : init) set(p, v);
}

Weight Weight::unit(int priority, ZInf v) {
  Weight w;
  w.set(priority, v);
  return w;
}

ZInf Weight::at(int priority) const {
  auto it = c_.find(priority);
  return it == c_.end() ? ZInf(0) : it->second;
}

void Weight::set(int priority, ZInf v) {
  if (v == ZInf(0)) {
    c_.erase(priority);
  } else {
    c_[priority] = v;
  }
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (const auto& [p, v] : o.c_) set(p, at(p) + v);
  return *this;
}

Weight Weight::negated() const {
  Weight r;
  for (const auto& [p, v] : c_) {
    r.set(p, v.is_inf() ? v : ZInf(-v.value()));
  }
  return r;
}

int Weight::compare(const Weight& o) const {
  auto a = c_.begin();
  auto b = o.c_.begin();
  for (; a != c_.end() && b != o.c_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    if (a->second != b->second) return a->second < b->second ? -1 : 1;
  }
  if (a == c_.end() && b == o.c_.end()) return 0;
  return a == c_.end() ? -1 : 1;
}

std::string Weight::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, v] : c_) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(p) + ":" + v.str();
  }
  return s + "}";
}

namespace {

std::set<int> support(const Weight& a, const Weight& b) {
  std::set<int> keys;
  for (const auto& kv : a.components()) keys.insert(kv.first);
  for (const auto& kv : b.components()) keys.insert(kv.first);
  return keys;
}

}  // namespace

bool zi_leq(const Weight& a, const Weight& b) {
  for (int p : support(a, b)) {
    if (!(a.at(p) <= b.at(p))) return false;
  }
  return true;
}

bool coef_leq(const Weight& a, const Weight& b) { return zi_leq(b, a); }

ZInf collapse_component(int b, ZInf w) {
  if (w.is_inf() || w.value() >= b) return ZInf::inf();
  if (w.value() < -b) return ZInf(-b);
  return w;
}

Weight collapse_weight(int b, const Weight& w) {
  Weight r;
  for (const auto& [p, v] : w.components()) r.set(p, collapse_component(b, v));
  return r;
}

}  // namespace totality::core
