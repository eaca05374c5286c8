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


#include <gtest/gtest.h>

#include "growth/error.hpp"
#include "growth/format.hpp"
#include "growth/order.hpp"
#include "support/generators.hpp"

namespace growth {
namespace {

using Kind = OrderRelation::Kind;

GrowthMonomial M(Rational c, ExpPart::Terms e, Rational a0,
                 std::vector<Rational> logs = {}) {
  return GrowthMonomial::canonicalize(std::move(c), std::move(e),
                                      std::move(a0), std::move(logs));
}

GrowthMonomial x_pow(Rational a) { return GrowthMonomial::power_of_t(a); }
GrowthMonomial abs_of(const GrowthMonomial& m) {
  return m.with_coeff(abs(m.coeff()));
}

Kind flip(Kind k) {
  if (k == Kind::kGreater) return Kind::kSmaller;
  if (k == Kind::kSmaller) return Kind::kGreater;
  return Kind::kSame;
}

TEST(CompareOrder, LogBelowThousandthRoot) {
  EXPECT_EQ(compare_order(M(1, {}, 0, {1}), x_pow(rational(1, 1000))),
            OrderRelation::smaller());
}

TEST(CompareOrder, ExpAbovePowers) {
  EXPECT_EQ(compare_order(GrowthMonomial::exponential(1, 1), x_pow(1000)),
            OrderRelation::greater());
}

TEST(CompareOrder, IteratedLogBelowLog) {
  EXPECT_EQ(compare_order(GrowthMonomial::iterated_log(2), GrowthMonomial::iterated_log(1)),
            OrderRelation::smaller());
}

TEST(CompareOrder, SameOrderCarriesRatio) {
  const OrderRelation rel = compare_order(M(2, {}, 1), M(3, {}, 1));
  EXPECT_EQ(rel.kind, Kind::kSame);
  EXPECT_EQ(rel.ratio, rational(2, 3));
}

TEST(CompareOrder, IgnoresSigns) {
  EXPECT_EQ(compare_order(M(-5, {}, 2), M(1, {}, 1)).kind, Kind::kGreater);
  EXPECT_EQ(compare_order(M(-2, {}, 1), M(3, {}, 1)),
            OrderRelation::same(rational(-2, 3)));
}

TEST(CompareOrder, LargerBetaDecides) {
  // exp(x^2 - 100 x) beats exp(50 x).
  EXPECT_EQ(compare_order(M(1, {{2, 1}, {1, -100}}, 0), M(1, {{1, 50}}, 0)).kind,
            Kind::kGreater);
  EXPECT_EQ(compare_order(M(1, {{2, -1}}, 0), x_pow(-1000)).kind, Kind::kSmaller);
}

TEST(RatioLimit, Examples) {
  EXPECT_EQ(ratio_limit(GrowthMonomial::exponential(2, 1), GrowthMonomial::exponential(1, 1)),
            LimitValue::infinite(1));
  testing::Gen gen(21);
  for (int i = 0; i < 100; ++i) {
    const GrowthMonomial m = gen.monomial();
    EXPECT_EQ(ratio_limit(m, m), LimitValue::finite(1));
  }
  // x^2 * u at 0+ against 1.
  EXPECT_EQ(ratio_limit(M(1, {}, -2, {1}), GrowthMonomial::constant(1)),
            LimitValue::zero());
  EXPECT_EQ(ratio_limit(M(-1, {}, 2), M(1, {}, 1)), LimitValue::infinite(-1));
  EXPECT_EQ(ratio_limit(M(-3, {}, 1), M(6, {}, 1)),
            LimitValue::finite(rational(-1, 2)));
}

TEST(Classify, Classes) {
  EXPECT_EQ(classify(x_pow(rational(-3, 2))), OrderClass::kClass1);
  EXPECT_EQ(classify(M(1, {}, -2, {3})), OrderClass::kClass2);
  EXPECT_EQ(classify(M(1, {{1, -1}}, -4)), OrderClass::kClass3);
}

TEST(Between, Examples) {
  EXPECT_EQ(between(x_pow(1), x_pow(2)), x_pow(rational(3, 2)));
  const GrowthMonomial lx = M(1, {}, 0, {1});
  const GrowthMonomial root = x_pow(rational(1, 1000));
  const GrowthMonomial mid = between(lx, root);
  EXPECT_EQ(canonical_notation(mid), "[1; {}; 1/2000; (1/2)]");
  EXPECT_EQ(compare_order(lx, mid).kind, Kind::kSmaller);
  EXPECT_EQ(compare_order(mid, root).kind, Kind::kSmaller);
}

TEST(Between, SameOrderIsRejected) {
  try {
    between(M(2, {}, 1), M(7, {}, 1));
    FAIL() << "expected E_SAME_ORDER";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSameOrder);
  }
}

TEST(Between, WedgeChain) {
  for (const Rational alpha : {Rational(1), rational(5, 2)}) {
    for (const int n : {2, 1000}) {
      const GrowthMonomial lo = x_pow(alpha);
      const GrowthMonomial wedge = M(1, {}, alpha, {1});
      const GrowthMonomial hi = x_pow(alpha + rational(1, n));
      EXPECT_EQ(compare_order(lo, wedge).kind, Kind::kSmaller);
      EXPECT_EQ(compare_order(wedge, hi).kind, Kind::kSmaller);
    }
  }
}

TEST(Between, StrictAndDense) {
  testing::Gen gen(22);
  int checked = 0;
  while (checked < 1000) {
    const GrowthMonomial a = gen.monomial();
    const GrowthMonomial b = gen.monomial();
    const OrderRelation rel = compare_order(a, b);
    if (rel.is_same()) continue;
    ++checked;
    const GrowthMonomial mid = between(a, b);
    EXPECT_EQ(compare_order(a, mid).kind, rel.kind);
    EXPECT_EQ(compare_order(mid, b).kind, rel.kind);
    GrowthMonomial hi = mid;
    for (int depth = 0; depth < 4; ++depth) {
      hi = between(a, hi);
      EXPECT_EQ(compare_order(a, hi).kind, rel.kind);
    }
  }
}

TEST(Preorder, ReflexiveAntisymmetricTransitive) {
  testing::Gen gen(23);
  for (int i = 0; i < 1000; ++i) {
    const GrowthMonomial a = gen.monomial();
    const GrowthMonomial b = gen.monomial();
    const GrowthMonomial c = gen.monomial();
    EXPECT_EQ(compare_order(a, a), OrderRelation::same(1));
    const Kind ab = compare_order(a, b).kind;
    EXPECT_EQ(compare_order(b, a).kind, flip(ab));
    const Kind bc = compare_order(b, c).kind;
    const Kind ac = compare_order(a, c).kind;
    if (ab == bc) EXPECT_EQ(ac, ab);
    if (ab == Kind::kSame) EXPECT_EQ(ac, bc);
    if (bc == Kind::kSame) EXPECT_EQ(ac, ab);
  }
}

TEST(Monotonicity, Multiplication) {
  testing::Gen gen(24);
  for (int i = 0; i < 1000; ++i) {
    const GrowthMonomial a = gen.monomial();
    const GrowthMonomial b = gen.monomial();
    const GrowthMonomial n = gen.monomial();
    EXPECT_EQ(compare_order(a * n, b * n).kind, compare_order(a, b).kind);
  }
}

TEST(Monotonicity, Power) {
  testing::Gen gen(25);
  const GrowthMonomial one = GrowthMonomial::constant(1);
  int checked = 0;
  while (checked < 1000) {
    const GrowthMonomial m = gen.monomial().with_coeff(1);
    if (compare_order(m, one).kind != Kind::kGreater) continue;
    ++checked;
    Rational r = gen.positive_rational(5, 6);
    Rational s = gen.positive_rational(5, 6);
    if (r == s) s += 1;
    if (r > s) std::swap(r, s);
    const GrowthMonomial mr = power(m, r);
    const GrowthMonomial ms = power(m, s);
    EXPECT_EQ(compare_order(one, mr).kind, Kind::kSmaller);
    EXPECT_EQ(compare_order(mr, ms).kind, Kind::kSmaller);
  }
}

TEST(Properties, LogBelowEveryPower) {
  testing::Gen gen(26);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> logs(static_cast<std::size_t>(gen.integer(1, 3)));
    for (auto& a : logs) a = gen.rational(50, 3);
    const GrowthMonomial l = M(gen.positive_rational(9, 9), {}, 0, logs);
    const Rational eps = rational(1, gen.integer(1, 1000000));
    EXPECT_EQ(compare_order(l, x_pow(eps)).kind, Kind::kSmaller);
    // Each deeper level sits below every positive power of the level above.
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 3));
    const GrowthMonomial deeper =
        GrowthMonomial::iterated_log(k + 1, gen.positive_rational(1000, 1));
    EXPECT_EQ(compare_order(deeper, GrowthMonomial::iterated_log(k, eps)).kind,
              Kind::kSmaller);
  }
}

TEST(Properties, ExponentialAboveEveryPower) {
  testing::Gen gen(27);
  for (int i = 0; i < 500; ++i) {
    ExpPart::Terms terms{{gen.positive_rational(3, 3), gen.positive_rational(5, 5)}};
    const GrowthMonomial e = M(gen.nonzero_rational(5, 5), terms,
                               gen.rational(20, 3), {gen.rational(20, 3)});
    const GrowthMonomial p = M(1, {}, gen.positive_rational(100000, 1));
    EXPECT_EQ(compare_order(e, p).kind, Kind::kGreater);
  }
}

TEST(Properties, CompareAgreesWithRatioLimit) {
  testing::Gen gen(28);
  for (int i = 0; i < 1000; ++i) {
    const GrowthMonomial a = gen.monomial();
    const GrowthMonomial b = gen.monomial();
    const OrderRelation rel = compare_order(a, b);
    const LimitValue lim = ratio_limit(abs_of(a), abs_of(b));
    switch (rel.kind) {
      case Kind::kGreater:
        EXPECT_EQ(lim, LimitValue::infinite(1));
        break;
      case Kind::kSmaller:
        EXPECT_EQ(lim, LimitValue::zero());
        break;
      case Kind::kSame:
        EXPECT_EQ(lim, LimitValue::finite(abs(rel.ratio)));
        EXPECT_EQ(ratio_limit(a, b), LimitValue::finite(rel.ratio));
        break;
    }
  }
}

}  // namespace
}  // namespace growth
