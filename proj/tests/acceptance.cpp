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


// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "growth/calculus.hpp"
#include "growth/error.hpp"
#include "growth/format.hpp"
#include "growth/numeric.hpp"
#include "growth/order.hpp"
#include "growth/parser.hpp"
#include "support/generators.hpp"

namespace growth {
namespace {

using Kind = OrderRelation::Kind;

GrowthMonomial inf(const std::string& s) { return parse(s, Frame::kInfinity).value; }
GrowthMonomial zero(const std::string& s) { return parse(s, Frame::kZeroPlus).value; }

GrowthMonomial at_zero(Rational p, Rational m, Rational alpha, Rational beta) {
  return GrowthMonomial::canonicalize(1, {{beta, -alpha}}, -p, {m});
}

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " violation(s)";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

bool criterion_log_below_roots(Check& c) {
  for (const std::string n : {"1", "10", "1000", "1000000000"}) {
    c.expect(compare_order(inf("log(x)"), inf("x^(1/" + n + ")")).kind == Kind::kSmaller,
             "log x vs x^(1/" + n + ")");
    const LhopitalReport r =
        lhopital_check({Frame::kInfinity, inf("1/log(x)")},
                       {Frame::kInfinity, inf("x^(-1/" + n + ")")});
    c.expect(r.consistent && r.direct == LimitValue::infinite(1), "lhopital n=" + n);
  }
  const DerivationReport d = replay_derivation(DerivationCase::kLogBelowRoots, 1000);
  c.expect(d.all_verified(), "transcript steps");
  c.expect(d.final_v == inf("x^(1/1000)/1000"), "final v = " + pretty(d.final_v, d.frame));
  c.expect(d.verdict == LimitValue::infinite(1), "verdict");
  return c.ok();
}

bool criterion_exp_above_powers(Check& c) {
  for (const std::string n : {"1", "10", "1000"}) {
    c.expect(ratio_limit(inf("exp(x)"), inf("x^" + n)) == LimitValue::infinite(1),
             "exp(x)/x^" + n);
  }
  const NumericReport r = verify_order_numeric(
      inf("exp(x)"), inf("x^1000"), SampleGrid::make(Frame::kInfinity, 1e2, 1e4, 32));
  c.expect(r.verdict == Verdict::kPass, "numeric verdict " + verdict_name(r.verdict));
  return c.ok();
}

bool criterion_power_times_u(Check& c) {
  for (const std::string n : {"1", "2", "5"}) {
    c.expect(ratio_limit(zero("x^" + n + "*u"), GrowthMonomial::constant(1)) ==
                 LimitValue::zero(),
             "x^" + n + "*u");
  }
  const DerivationReport d = replay_derivation(DerivationCase::kPowerTimesLogAtZero, 2);
  c.expect(d.all_verified(), "transcript steps");
  c.expect(d.final_v == zero("x^2/2"), "final v = " + pretty(d.final_v, d.frame));
  return c.ok();
}

bool criterion_power_times_u_area(Check& c) {
  const Expression y{Frame::kZeroPlus, zero("x*u")};
  const AntiderivativeResult r = asymptotic_antiderivative(y);
  c.expect(r.antiderivative == zero("x^2*u/2"), "F = " + pretty(r.antiderivative, Frame::kZeroPlus));
  double previous = INFINITY;
  for (const double x : {1e-3, 1e-6, 1e-9}) {
    const double u = std::log(1.0 / x);
    // Integral from 0 with x = x0 * exp(-w).
    const double area =
        x * x * adaptive_simpson([u](double w) { return std::exp(-2 * w) * (u + w); }, 0.0, 60.0);
    const double oracle = x * x * (u + 0.5) / 2.0;
    c.expect(std::abs(area / oracle - 1.0) < 1e-9, "quadrature oracle");
    const double f = std::exp(eval_log(r.antiderivative, 1.0 / x));
    const double measured = std::abs(f / area - 1.0);
    const double predicted = 1.0 / (2.0 * u + 1.0);
    c.expect(std::abs(measured / predicted - 1.0) < 0.10,
             "relative error at x=" + std::to_string(x));
    c.expect(measured < previous, "decreasing");
    previous = measured;
  }
  return c.ok();
}

bool criterion_exact_case(Check& c) {
  const double area = adaptive_simpson(
      [](double x) { return std::exp(-1.0 / x) / (x * x); }, 0.01, 0.1, 1e-10);
  const double expected = std::exp(-10.0) - std::exp(-100.0);
  c.expect(std::abs(area / expected - 1.0) <= 1e-8, "quadrature");
  const Expression y = solve_area_equation(1, 2);
  c.expect(y.value == zero("x^-2*exp(-1/x)"), "solve_area_equation(1, 2) = " + pretty(y));
  const AntiderivativeResult r = asymptotic_antiderivative(y);
  c.expect(rectangle_form(r, y) == RectangleForm{2, 1}, "rectangle (2, 1)");
  c.expect(r.antiderivative == multiply(zero("x^2"), y.value), "F = x^2 y");
  return c.ok();
}

bool criterion_combined_formula(Check& c) {
  testing::Gen gen(2026);
  for (int i = 0; i < 50; ++i) {
    const Rational k = gen.rational(6, 4);
    const Rational m = gen.rational(5, 3);
    const Rational alpha = rational(gen.integer(1, 60), 20);
    const Rational beta = rational(gen.integer(1, 60), 20);
    const GrowthMonomial y = at_zero(k, m, alpha, beta);
    const AntiderivativeResult r = asymptotic_antiderivative({Frame::kZeroPlus, y});
    const GrowthMonomial expected =
        at_zero(k + beta + 1, m, alpha, beta).with_coeff(1 / (alpha * beta));
    c.expect(r.antiderivative == expected, "formula for " + canonical_notation(y));
    c.expect(dominant_term(differentiate({Frame::kZeroPlus, r.antiderivative})) == y,
             "round trip for " + canonical_notation(y));
  }
  return c.ok();
}

bool criterion_density(Check& c) {
  testing::Gen gen(7);
  int pairs = 0;
  while (pairs < 1000) {
    const GrowthMonomial a = gen.monomial();
    const GrowthMonomial b = gen.monomial();
    const Kind k = compare_order(a, b).kind;
    if (k == Kind::kSame) continue;
    ++pairs;
    const GrowthMonomial mid = between(a, b);
    c.expect(compare_order(a, mid).kind == k && compare_order(mid, b).kind == k,
             canonical_notation(a) + " / " + canonical_notation(b));
  }
  for (const std::string alpha : {"1", "(5/2)"}) {
    for (const std::string n : {"2", "1000"}) {
      const GrowthMonomial lo = inf("x^" + alpha);
      const GrowthMonomial wedge = inf("x^" + alpha + "*log(x)");
      const GrowthMonomial hi = multiply(lo, inf("x^(1/" + n + ")"));
      c.expect(compare_order(lo, wedge).kind == Kind::kSmaller &&
                   compare_order(wedge, hi).kind == Kind::kSmaller,
               "chain alpha=" + alpha + " n=" + n);
    }
  }
  return c.ok();
}

bool criterion_preorder(Check& c) {
  testing::Gen gen(8);
  const auto flip = [](Kind k) {
    return k == Kind::kGreater ? Kind::kSmaller : k == Kind::kSmaller ? Kind::kGreater : k;
  };
  for (int i = 0; i < 1000; ++i) {
    const GrowthMonomial a = gen.monomial();
    const GrowthMonomial b = gen.monomial();
    const GrowthMonomial d = gen.monomial();
    const Kind ab = compare_order(a, b).kind;
    const Kind bd = compare_order(b, d).kind;
    c.expect(compare_order(b, a).kind == flip(ab), "antisymmetry");
    if (ab == bd) c.expect(compare_order(a, d).kind == ab, "transitivity");
    c.expect(compare_order(multiply(a, d), multiply(b, d)).kind == ab, "multiplication");
  }
  const GrowthMonomial one = GrowthMonomial::constant(1);
  int powers = 0;
  while (powers < 1000) {
    const GrowthMonomial m = gen.monomial().with_coeff(1);
    if (compare_order(m, one).kind != Kind::kGreater) continue;
    ++powers;
    const Rational r = gen.positive_rational(4, 5);
    const Rational s = r + gen.positive_rational(4, 5);
    const GrowthMonomial mr = power(m, r);
    c.expect(compare_order(one, mr).kind == Kind::kSmaller &&
                 compare_order(mr, power(m, s)).kind == Kind::kSmaller,
             "power monotonicity");
  }
  return c.ok();
}

bool criterion_lhopital(Check& c) {
  testing::Gen gen(9);
  const GrowthMonomial one = GrowthMonomial::constant(1);
  int pairs = 0;
  while (pairs < 500) {
    const GrowthMonomial p = gen.monomial();
    const GrowthMonomial q = gen.monomial();
    const LimitValue lp = ratio_limit(p.with_coeff(1), one);
    const LimitValue lq = ratio_limit(q.with_coeff(1), one);
    if (lp.kind == LimitValue::Kind::kFinite || lp.kind != lq.kind) continue;
    ++pairs;
    const Frame frame = pairs % 2 == 0 ? Frame::kZeroPlus : Frame::kInfinity;
    const LhopitalReport r = lhopital_check({frame, p}, {frame, q});
    c.expect(r.consistent && r.direct == r.derivative_based,
             canonical_notation(p) + " / " + canonical_notation(q));
  }
  return c.ok();
}

bool criterion_parser(Check& c) {
  testing::Gen gen(10);
  for (int i = 0; i < 500; ++i) {
    const Frame frame = i % 2 == 0 ? Frame::kInfinity : Frame::kZeroPlus;
    const GrowthMonomial m = gen.monomial();
    const std::string text = pretty(m, frame);
    try {
      c.expect(parse(text, frame).value == m, text);
    } catch (const Error& e) {
      c.expect(false, text + ": " + e.what());
    }
  }
  struct Case {
    const char* text;
    Frame frame;
    ErrorKind kind;
  };
  const Case cases[] = {
      {"log(x+1)", Frame::kInfinity, ErrorKind::kGrammar},
      {"exp(1)", Frame::kInfinity, ErrorKind::kGrammar},
      {"exp(log(x)^2)", Frame::kInfinity, ErrorKind::kUnsupportedOrder},
      {"log(x)", Frame::kZeroPlus, ErrorKind::kDomain},
      {"u", Frame::kInfinity, ErrorKind::kDomain},
  };
  for (const Case& k : cases) {
    try {
      parse(k.text, k.frame);
      c.expect(false, std::string(k.text) + " accepted");
    } catch (const ParseError& e) {
      c.expect(e.kind() == k.kind, std::string(k.text) + " gave " + std::string(error_code(e.kind())));
    }
  }
  return c.ok();
}

}  // namespace
}  // namespace growth

int main() {
  using growth::Check;
  struct Criterion {
    const char* name;
    std::function<bool(Check&)> run;
  };
  const Criterion criteria[] = {
      {"logarithm below all roots", growth::criterion_log_below_roots},
      {"exponential above all powers", growth::criterion_exp_above_powers},
      {"x^n*u infinitely small at 0+", growth::criterion_power_times_u},
      {"area under x*u", growth::criterion_power_times_u_area},
      {"exact case x^-2*exp(-1/x)", growth::criterion_exact_case},
      {"combined antiderivative formula", growth::criterion_combined_formula},
      {"order density and between", growth::criterion_density},
      {"preorder and monotonicity laws", growth::criterion_preorder},
      {"L'Hopital consistency", growth::criterion_lhopital},
      {"parser round trip and errors", growth::criterion_parser},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    Check check;
    bool ok = false;
    try {
      ok = criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && check.ok();
    if (!ok) ++failed;
    std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", index, criterion.name,
                ok ? "" : "  -- ", ok ? "" : check.summary().c_str());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2f s\n", index - failed, index, seconds);
  return failed == 0 ? 0 : 1;
}
