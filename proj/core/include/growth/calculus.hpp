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

#ifndef GROWTH_CALCULUS_HPP_
#define GROWTH_CALCULUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growth/monomial.hpp"
#include "growth/order.hpp"

namespace growth {

/// d/dt of an internal-frame monomial:
///   M * (E'(t) + a0/t + sum_j a_j / (t * L_1 t * ... * L_j t)).
MonomialSum differentiate_in_t(const GrowthMonomial& m);

/// Derivative with respect to the frame variable x. At 0+ the chain rule
/// through t = 1/x contributes a factor -t^2.
MonomialSum differentiate(const Expression& e);

/// The unique term of maximal order. Throws E_ZERO_SUM on the zero sum.
GrowthMonomial dominant_term(const MonomialSum& s);

struct LhopitalReport {
  bool consistent = false;
  LimitValue direct;
  LimitValue derivative_based;
};

/// Compares lim p/q with lim p'/q' (dominant terms). Both expressions must
/// share a frame and jointly tend to 0 or to infinity, else E_PRECONDITION.
LhopitalReport lhopital_check(const Expression& p, const Expression& q);

/// Replayable ratio-limit derivations built on L'Hopital's rule plus the
/// power-combination trick.
enum class DerivationCase {
  kLogBelowRoots,       // "E507-9":  x^(1/n) / log x at infinity
  kExpAbovePowers,      // "E507-16": e^x / x^n at infinity
  kPowerTimesLogAtZero  // "E507-21": x^n * u at 0+
};

/// Throws E_UNKNOWN_CASE.
DerivationCase parse_case(std::string_view id);
std::string_view case_id(DerivationCase c);

struct DerivationStep {
  std::string statement;
  GrowthMonomial before;
  GrowthMonomial after;
  std::string justification;
  /// `after` matched the independently written closed form.
  bool verified = false;
};

struct DerivationReport {
  std::string case_id;
  std::int64_t n = 0;
  Frame frame = Frame::kInfinity;
  GrowthMonomial p;
  GrowthMonomial q;
  MonomialSum dp;
  MonomialSum dq;
  GrowthMonomial dominant_ratio;
  std::vector<DerivationStep> steps;
  GrowthMonomial final_v;
  LimitValue verdict;
  /// ratio_limit(p, q) computed directly, for cross-checking `verdict`.
  LimitValue direct;
  std::string note;

  bool all_verified() const;
};

/// Throws E_PRECONDITION unless n >= 1.
DerivationReport replay_derivation(DerivationCase c, std::int64_t n);

struct RectangleForm {
  Rational s;
  Rational constant;

  friend bool operator==(const RectangleForm&, const RectangleForm&) = default;
};

struct AntiderivativeResult {
  GrowthMonomial antiderivative;
  /// differentiate(antiderivative) is exactly the integrand, with nothing
  /// discarded.
  bool exact = false;
  /// area = constant * x^s * integrand, when the antiderivative has that shape.
  std::optional<RectangleForm> rectangle;
  /// Which branch produced the result: 'a' exponential, 'b' pure power,
  /// 'c' power times logs, 'd' and 'e' the x^-1 cases.
  char branch = 'a';
  /// "exact" or the relative order of the discarded derivative terms.
  std::string validity;
};

/// Antiderivative near 0+ of c * x^p * u^m * (deeper logs) * exp(-alpha/x^beta),
/// accurate to leading order. Throws E_PRECONDITION off 0+ or for shapes
/// outside the supported branches, E_DIVERGENT when the integrand is not
/// integrable at 0+.
AntiderivativeResult asymptotic_antiderivative(const Expression& integrand);

/// (s, constant) with antiderivative = constant * x^s * integrand, checked by
/// canonical equality. Throws E_PRECONDITION when no such form exists.
RectangleForm rectangle_form(const AntiderivativeResult& r,
                             const Expression& integrand);

/// Representative solution of  integral(y dx) = c * x^s * y  near 0+:
/// y = x^-s * exp(-alpha/x^beta) with beta = s - 1, alpha = 1/(c (s - 1)).
/// Throws E_PRECONDITION unless c > 0 and s > 1.
Expression solve_area_equation(const Rational& c, const Rational& s);

}  // namespace growth

#endif  // GROWTH_CALCULUS_HPP_
