// Copyright 2026 The Growth Orders Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROWTH_ORDER_HPP_
#define GROWTH_ORDER_HPP_

#include <string>

#include "growth/monomial.hpp"

namespace growth {

/// Verdict of comparing two orders of magnitude. `ratio` is meaningful only
/// for kSame and equals coeff1/coeff2.
struct OrderRelation {
  enum class Kind { kSmaller, kGreater, kSame };

  Kind kind = Kind::kSame;
  Rational ratio = 1;

  static OrderRelation smaller() { return {Kind::kSmaller, 1}; }
  static OrderRelation greater() { return {Kind::kGreater, 1}; }
  static OrderRelation same(Rational r) { return {Kind::kSame, std::move(r)}; }

  bool is_same() const { return kind == Kind::kSame; }

  friend bool operator==(const OrderRelation& a, const OrderRelation& b) {
    return a.kind == b.kind && (a.kind != Kind::kSame || a.ratio == b.ratio);
  }
};

/// Limit of a ratio at the frame point. `value` is used by kFinite, `sign`
/// by kInfinite (and mirrors the value's sign for kFinite).
struct LimitValue {
  enum class Kind { kZero, kFinite, kInfinite };

  Kind kind = Kind::kZero;
  Rational value = 0;
  int sign = 0;

  static LimitValue zero() { return {Kind::kZero, 0, 0}; }
  static LimitValue finite(Rational v) {
    const int s = v.sign();
    return {Kind::kFinite, std::move(v), s};
  }
  static LimitValue infinite(int s) { return {Kind::kInfinite, 0, s < 0 ? -1 : 1}; }

  friend bool operator==(const LimitValue&, const LimitValue&) = default;
};

enum class OrderClass {
  kClass1,  // powers only
  kClass2,  // iterated logarithms, no exponential
  kClass3,  // exponential part present
};

/// Total preorder on |M|: exponential parts first (sign of the alpha at the
/// largest beta where they differ), then the power of t, then iterated-log
/// exponents lexicographically from log t downward; equal structure gives
/// Same(coeff1/coeff2).
OrderRelation compare_order(const GrowthMonomial& lhs, const GrowthMonomial& rhs);

/// lim lhs/rhs at t -> infinity (equivalently at the frame point, since
/// both frames share the internal representation).
LimitValue ratio_limit(const GrowthMonomial& lhs, const GrowthMonomial& rhs);

OrderClass classify(const GrowthMonomial& m);
inline OrderClass classify(const Expression& e) { return classify(e.value); }

/// Unit-coefficient monomial whose exponents are the midpoint of the two
/// inputs, so lhs < result < rhs (or reversed) strictly. Throws E_SAME_ORDER
/// when the inputs are of the same order.
GrowthMonomial between(const GrowthMonomial& lhs, const GrowthMonomial& rhs);

/// "smaller" / "greater" / "same".
std::string relation_name(OrderRelation::Kind kind);
/// "zero" / "finite" / "infinite".
std::string limit_name(LimitValue::Kind kind);
/// "class1" / "class2" / "class3".
std::string class_name(OrderClass c);

}  // namespace growth

#endif  // GROWTH_ORDER_HPP_
