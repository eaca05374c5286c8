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

#include "growth/order.hpp"

#include <algorithm>

#include "growth/error.hpp"

namespace growth {
namespace {

int compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

// -1, 0, +1 on structure only.
int structural_compare(const GrowthMonomial& lhs, const GrowthMonomial& rhs) {
  const ExpPart diff = lhs.exp_part() - rhs.exp_part();
  if (!diff.empty()) return diff.leading().second.sign();

  if (int c = compare_rational(lhs.pow_exp(), rhs.pow_exp()); c != 0) return c;

  const std::size_t depth = std::max(lhs.log_depth(), rhs.log_depth());
  for (std::size_t j = 1; j <= depth; ++j) {
    if (int c = compare_rational(lhs.log_exp(j), rhs.log_exp(j)); c != 0) {
      return c;
    }
  }
  return 0;
}

}  // namespace

OrderRelation compare_order(const GrowthMonomial& lhs,
                            const GrowthMonomial& rhs) {
  switch (structural_compare(lhs, rhs)) {
    case 1:
      return OrderRelation::greater();
    case -1:
      return OrderRelation::smaller();
    default:
      return OrderRelation::same(lhs.coeff() / rhs.coeff());
  }
}

LimitValue ratio_limit(const GrowthMonomial& lhs, const GrowthMonomial& rhs) {
  const OrderRelation rel = compare_order(lhs, rhs);
  switch (rel.kind) {
    case OrderRelation::Kind::kGreater:
      return LimitValue::infinite(lhs.coeff().sign() * rhs.coeff().sign());
    case OrderRelation::Kind::kSmaller:
      return LimitValue::zero();
    case OrderRelation::Kind::kSame:
      break;
  }
  return LimitValue::finite(rel.ratio);
}

OrderClass classify(const GrowthMonomial& m) {
  if (!m.exp_part().empty()) return OrderClass::kClass3;
  if (!m.log_exps().empty()) return OrderClass::kClass2;
  return OrderClass::kClass1;
}

GrowthMonomial between(const GrowthMonomial& lhs, const GrowthMonomial& rhs) {
  if (structural_compare(lhs, rhs) == 0) {
    throw Error(ErrorKind::kSameOrder,
                "no order lies strictly between two monomials of the same order");
  }
  // Midpoint of the exponent vectors; the first differing component lands
  // strictly between and every earlier one is shared, so the lexicographic
  // verdicts against both ends are strict.
  return power(multiply(lhs.with_coeff(1), rhs.with_coeff(1)), Rational(1, 2));
}

std::string relation_name(OrderRelation::Kind kind) {
  switch (kind) {
    case OrderRelation::Kind::kSmaller:
      return "smaller";
    case OrderRelation::Kind::kGreater:
      return "greater";
    case OrderRelation::Kind::kSame:
      break;
  }
  return "same";
}

std::string limit_name(LimitValue::Kind kind) {
  switch (kind) {
    case LimitValue::Kind::kZero:
      return "zero";
    case LimitValue::Kind::kFinite:
      return "finite";
    case LimitValue::Kind::kInfinite:
      break;
  }
  return "infinite";
}

std::string class_name(OrderClass c) {
  switch (c) {
    case OrderClass::kClass1:
      return "class1";
    case OrderClass::kClass2:
      return "class2";
    case OrderClass::kClass3:
      break;
  }
  return "class3";
}

}  // namespace growth
