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

#include "growth/calculus.hpp"

#include <algorithm>
#include <utility>

#include "growth/error.hpp"
#include "growth/format.hpp"

namespace growth {
namespace {

const GrowthMonomial kOne;

GrowthMonomial mono(Rational coeff, Rational pow_exp,
                    std::vector<Rational> logs = {},
                    ExpPart::Terms exp_terms = {}) {
  return GrowthMonomial::canonicalize(std::move(coeff), std::move(exp_terms),
                                      std::move(pow_exp), std::move(logs));
}

bool tends_to_zero(const GrowthMonomial& m) {
  return compare_order(m, kOne).kind == OrderRelation::Kind::kSmaller;
}

bool tends_to_infinity(const GrowthMonomial& m) {
  return compare_order(m, kOne).kind == OrderRelation::Kind::kGreater;
}

class Transcript {
 public:
  explicit Transcript(DerivationReport& report) : report_(report) {}

  const GrowthMonomial& record(std::string statement,
                               const GrowthMonomial& before,
                               const GrowthMonomial& computed,
                               const GrowthMonomial& expected,
                               std::string justification) {
    report_.steps.push_back(DerivationStep{std::move(statement), before,
                                           computed, std::move(justification),
                                           computed == expected});
    return report_.steps.back().after;
  }

 private:
  DerivationReport& report_;
};

// p, q and their derivatives; the steps shared by every case.
struct Setup {
  GrowthMonomial v;
  GrowthMonomial dp;
  GrowthMonomial dq;
  GrowthMonomial dp_over_dq;
};

Setup begin_derivation(DerivationReport& report, Transcript& transcript,
                       const GrowthMonomial& expected_v,
                       const GrowthMonomial& expected_dp,
                       const GrowthMonomial& expected_dq,
                       const GrowthMonomial& expected_dp_over_dq) {
  Setup s;
  s.v = transcript.record("v = p/q", report.p, divide(report.p, report.q),
                          expected_v, "definition");
  report.dp = differentiate(Expression{report.frame, report.p});
  report.dq = differentiate(Expression{report.frame, report.q});
  s.dp = transcript.record("dp/dx", report.p, dominant_term(report.dp),
                           expected_dp, "differentiate");
  s.dq = transcript.record("dq/dx", report.q, dominant_term(report.dq),
                           expected_dq, "differentiate");
  report.dominant_ratio = divide(s.dp, s.dq);
  s.dp_over_dq = transcript.record("v = dp/dq", s.v, report.dominant_ratio,
                                   expected_dp_over_dq, "lhopital");
  return s;
}

void finish(DerivationReport& report, GrowthMonomial v) {
  report.final_v = std::move(v);
  report.verdict = ratio_limit(report.final_v, kOne);
  report.direct = ratio_limit(report.p, report.q);
}

DerivationReport replay_log_below_roots(std::int64_t n) {
  // x^(1/n) / log x with p = 1/log x, q = x^(-1/n).
  const Rational r(1, n);
  DerivationReport report;
  report.frame = Frame::kInfinity;
  report.p = mono(1, 0, {-1});
  report.q = mono(1, -r);
  Transcript transcript(report);
  Setup s = begin_derivation(report, transcript, mono(1, r, {-1}),
                             mono(-1, -1, {-2}), mono(-r, -r - 1),
                             mono(n, r, {-2}));
  const GrowthMonomial v2 = transcript.record(
      "v^2 = (p/q)^2", s.v, power(s.v, 2), mono(1, 2 * r, {-2}), "square");
  const GrowthMonomial v = transcript.record(
      "v = v^2 / (dp/dq)", v2, divide(v2, s.dp_over_dq), mono(r, r),
      "power-combination");
  report.note =
      "v^2 / (dp/dq) gives x^(1/n)/n; the variant n*x^(1/n) differs by the "
      "constant factor n^2 and diverges as well";
  finish(report, v);
  return report;
}

DerivationReport replay_exp_above_powers(std::int64_t n) {
  // e^x / x^n with p = x^-n, q = e^-x; base a = e so log a = 1.
  const Rational nn(n);
  DerivationReport report;
  report.frame = Frame::kInfinity;
  report.p = mono(1, -nn);
  report.q = mono(1, 0, {}, {{1, -1}});
  Transcript transcript(report);
  Setup s = begin_derivation(report, transcript, mono(1, -nn, {}, {{1, 1}}),
                             mono(-nn, -nn - 1), mono(-1, 0, {}, {{1, -1}}),
                             mono(nn, -nn - 1, {}, {{1, 1}}));
  const Rational n_to_n = *exact_power(nn, nn);
  const GrowthMonomial vn1 = transcript.record(
      "v^(n+1) = (p/q)^(n+1)", s.v, power(s.v, nn + 1),
      mono(1, -nn * (nn + 1), {}, {{1, nn + 1}}), "power");
  const GrowthMonomial dn = transcript.record(
      "(dp/dq)^n", s.dp_over_dq, power(s.dp_over_dq, nn),
      mono(n_to_n, -nn * (nn + 1), {}, {{1, nn}}), "power");
  const GrowthMonomial v = transcript.record(
      "v = v^(n+1) / (dp/dq)^n", vn1, divide(vn1, dn),
      mono(Rational(1) / n_to_n, 0, {}, {{1, 1}}), "power-combination");
  report.note = "base a = e, so the factor (log a)^n equals 1";
  finish(report, v);
  return report;
}

DerivationReport replay_power_times_log(std::int64_t n) {
  // x^n * u at 0+ with p = x^n, q = 1/u; internally x^k = t^-k, u = log t.
  const Rational nn(n);
  DerivationReport report;
  report.frame = Frame::kZeroPlus;
  report.p = mono(1, -nn);
  report.q = mono(1, 0, {-1});
  Transcript transcript(report);
  Setup s = begin_derivation(report, transcript, mono(1, -nn, {1}),
                             mono(nn, -(nn - 1)), mono(1, 1, {-2}),
                             mono(nn, -nn, {2}));
  const GrowthMonomial v2 = transcript.record(
      "v^2 = (p/q)^2", s.v, power(s.v, 2), mono(1, -2 * nn, {2}), "square");
  const GrowthMonomial v = transcript.record(
      "v = v^2 / (dp/dq)", v2, divide(v2, s.dp_over_dq),
      mono(Rational(1) / nn, -nn), "power-combination");
  report.note = "u = log(1/x), so du = -dx/x";
  finish(report, v);
  return report;
}

}  // namespace

MonomialSum differentiate_in_t(const GrowthMonomial& m) {
  MonomialSum out;
  for (const auto& [beta, alpha] : m.exp_part().terms()) {
    out.add(multiply(m, mono(alpha * beta, beta - 1)));
  }
  if (m.pow_exp() != 0) out.add(multiply(m, mono(m.pow_exp(), -1)));
  for (std::size_t j = 1; j <= m.log_depth(); ++j) {
    const Rational a = m.log_exp(j);
    if (a == 0) continue;
    // d/dt (L_j t) = 1 / (t * L_1 t * ... * L_{j-1} t).
    out.add(multiply(m, mono(a, -1, std::vector<Rational>(j, Rational(-1)))));
  }
  return out;
}

MonomialSum differentiate(const Expression& e) {
  MonomialSum d = differentiate_in_t(e.value);
  if (e.frame == Frame::kInfinity) return d;
  return d.times(mono(-1, 2));
}

GrowthMonomial dominant_term(const MonomialSum& s) {
  if (s.is_zero()) {
    throw Error(ErrorKind::kZeroSum, "the sum is zero after merging like terms");
  }
  const auto& terms = s.terms();
  return *std::max_element(
      terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return compare_order(a, b).kind == OrderRelation::Kind::kSmaller;
      });
}

LhopitalReport lhopital_check(const Expression& p, const Expression& q) {
  if (p.frame != q.frame) {
    throw Error(ErrorKind::kPrecondition,
                "numerator and denominator are taken at different frames");
  }
  const bool zero_over_zero = tends_to_zero(p.value) && tends_to_zero(q.value);
  const bool inf_over_inf =
      tends_to_infinity(p.value) && tends_to_infinity(q.value);
  if (!zero_over_zero && !inf_over_inf) {
    throw Error(ErrorKind::kPrecondition,
                "L'Hopital's rule needs a 0/0 or infinity/infinity shape");
  }
  LhopitalReport report;
  report.direct = ratio_limit(p.value, q.value);
  report.derivative_based = ratio_limit(dominant_term(differentiate(p)),
                                        dominant_term(differentiate(q)));
  report.consistent = report.direct == report.derivative_based;
  return report;
}

DerivationCase parse_case(std::string_view id) {
  if (id == "E507-9") return DerivationCase::kLogBelowRoots;
  if (id == "E507-16") return DerivationCase::kExpAbovePowers;
  if (id == "E507-21") return DerivationCase::kPowerTimesLogAtZero;
  throw Error(ErrorKind::kUnknownCase,
              "unknown derivation case '" + std::string(id) +
                  "' (expected E507-9, E507-16 or E507-21)");
}

std::string_view case_id(DerivationCase c) {
  switch (c) {
    case DerivationCase::kLogBelowRoots:
      return "E507-9";
    case DerivationCase::kExpAbovePowers:
      return "E507-16";
    case DerivationCase::kPowerTimesLogAtZero:
      break;
  }
  return "E507-21";
}

bool DerivationReport::all_verified() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const auto& s) { return s.verified; });
}

DerivationReport replay_derivation(DerivationCase c, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kPrecondition,
                "the derivation parameter n must be a positive integer");
  }
  DerivationReport report;
  switch (c) {
    case DerivationCase::kLogBelowRoots:
      report = replay_log_below_roots(n);
      break;
    case DerivationCase::kExpAbovePowers:
      report = replay_exp_above_powers(n);
      break;
    case DerivationCase::kPowerTimesLogAtZero:
      report = replay_power_times_log(n);
      break;
  }
  report.case_id = std::string(case_id(c));
  report.n = n;
  return report;
}

AntiderivativeResult asymptotic_antiderivative(const Expression& integrand) {
  if (integrand.frame != Frame::kZeroPlus) {
    throw Error(ErrorKind::kPrecondition,
                "asymptotic antiderivatives are taken near 0+ only");
  }
  const GrowthMonomial& y = integrand.value;
  AntiderivativeResult result;

  if (!y.exp_part().empty()) {
    // Internally exp(alpha_t * t^beta); decaying at 0+ iff alpha_t < 0.
    const auto& [beta, alpha_t] = y.exp_part().leading();
    if (alpha_t > 0) {
      throw Error(ErrorKind::kDivergent,
                  "the exponential factor grows without bound as x -> 0+");
    }
    const Rational alpha = -alpha_t;
    const Rational constant = Rational(1) / (alpha * beta);
    result.branch = 'a';
    result.antiderivative = multiply(y, mono(constant, -(beta + 1)));
    result.rectangle = RectangleForm{beta + 1, constant};
  } else {
    const Rational p = -y.pow_exp();
    if (p > -1) {
      const Rational constant = Rational(1) / (p + 1);
      result.branch = y.log_exps().empty() ? 'b' : 'c';
      result.antiderivative = multiply(y, mono(constant, -1));
      result.rectangle = RectangleForm{1, constant};
    } else if (p == -1) {
      if (y.log_depth() > 1) {
        throw Error(ErrorKind::kPrecondition,
                    "x^-1 times iterated logs of u has no antiderivative in "
                    "the monomial class");
      }
      const Rational m = y.log_exp(1);
      if (m != -1) {
        result.branch = 'd';
        result.antiderivative = mono(-y.coeff() / (m + 1), 0, {m + 1});
      } else {
        result.branch = 'e';
        result.antiderivative = mono(-y.coeff(), 0, {0, 1});
      }
    } else {
      throw Error(ErrorKind::kDivergent,
                  "x^" + to_string(p) +
                      " is not integrable at 0+ without an exponential factor");
    }
  }

  const MonomialSum derivative =
      differentiate(Expression{Frame::kZeroPlus, result.antiderivative});
  result.exact = derivative == MonomialSum{y};
  if (result.exact) {
    result.validity = "exact";
  } else {
    // Relative order of what the leading-order antiderivative discards.
    MonomialSum rest = derivative;
    rest.add(y, -1);
    result.validity =
        "relative error O(" +
        pretty(divide(dominant_term(rest), y).with_coeff(1), Frame::kZeroPlus) +
        ")";
  }
  return result;
}

RectangleForm rectangle_form(const AntiderivativeResult& r,
                             const Expression& integrand) {
  const GrowthMonomial ratio = divide(r.antiderivative, integrand.value);
  if (!ratio.exp_part().empty() || !ratio.log_exps().empty()) {
    throw Error(ErrorKind::kPrecondition,
                "the antiderivative is not a constant times a power of x "
                "times the integrand");
  }
  // x^s = t^-s internally.
  RectangleForm form{-ratio.pow_exp(), ratio.coeff()};
  const GrowthMonomial rebuilt =
      multiply(mono(form.constant, -form.s), integrand.value);
  if (rebuilt != r.antiderivative) {
    throw Error(ErrorKind::kPrecondition, "rectangle identity does not hold");
  }
  return form;
}

Expression solve_area_equation(const Rational& c, const Rational& s) {
  if (c <= 0 || s <= 1) {
    throw Error(ErrorKind::kPrecondition,
                "the area equation needs c > 0 and s > 1");
  }
  const Rational beta = s - 1;
  const Rational alpha = Rational(1) / (c * beta);
  return Expression{Frame::kZeroPlus, mono(1, s, {}, {{beta, -alpha}})};
}

}  // namespace growth
