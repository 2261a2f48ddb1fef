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

#ifndef TOTALITY_CORE_WEIGHT_H_
#define TOTALITY_CORE_WEIGHT_H_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

namespace totality::core {

// An element of Z extended with a top element.
class ZInf {
 public:
  constexpr ZInf() = default;
  constexpr ZInf(int64_t v) : v_(v) {}  // NOLINT: implicit on purpose
  static constexpr ZInf inf() {
    ZInf z;
    z.inf_ = true;
    return z;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr int64_t value() const { return v_; }

  friend constexpr ZInf operator+(ZInf a, ZInf b) {
    if (a.inf_ || b.inf_) return inf();
    return ZInf(a.v_ + b.v_);
  }
  friend constexpr bool operator==(ZInf a, ZInf b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  // Natural order, with every integer below infinity.
  friend constexpr bool operator<(ZInf a, ZInf b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ZInf a, ZInf b) { return !(b < a); }

  std::string str() const;

 private:
  int64_t v_ = 0;
  bool inf_ = false;
};

// Finite map from priorities to ZInf. Absent keys are 0 and are never stored.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<std::pair<const int, ZInf>> init);

  static Weight unit(int priority, ZInf v);

  ZInf at(int priority) const;
  void set(int priority, ZInf v);
  bool is_zero() const { return c_.empty(); }
  const std::map<int, ZInf>& components() const { return c_; }

  Weight operator+(const Weight& o) const;
  Weight& operator+=(const Weight& o);
  Weight negated() const;
  bool operator==(const Weight& o) const { return c_ == o.c_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  // Arbitrary total order used only for canonical sorting.
  int compare(const Weight& o) const;

  std::string str() const;

 private:
  std::map<int, ZInf> c_;
};

// Pointwise natural order.
bool zi_leq(const Weight& a, const Weight& b);

// Pointwise reversed order: the order on approximations.
bool coef_leq(const Weight& a, const Weight& b);

// Weight collapsing at bound b > 0.
ZInf collapse_component(int b, ZInf w);
Weight collapse_weight(int b, const Weight& w);

}  // namespace totality::core

#endif  // TOTALITY_CORE_WEIGHT_H_
