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

#ifndef GROWTH_MONOMIAL_HPP_
#define GROWTH_MONOMIAL_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "growth/rational.hpp"

namespace growth {

/// Exponential part E(t) = sum of alpha * t^beta, stored as beta -> alpha.
/// Every beta is strictly positive and every alpha is nonzero; the empty map
/// means "no exponential factor".
class ExpPart {
 public:
  using Terms = std::map<Rational, Rational>;

  ExpPart() = default;

  /// Merges nothing: `terms` must already be keyed uniquely. Zero alphas are
  /// dropped; throws E_DOMAIN on a non-positive beta.
  explicit ExpPart(Terms terms);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Alpha attached to beta, or zero.
  Rational coefficient(const Rational& beta) const;

  /// Term with the largest beta. Precondition: !empty().
  const std::pair<const Rational, Rational>& leading() const {
    return *terms_.rbegin();
  }

  ExpPart operator+(const ExpPart& other) const;
  ExpPart operator-(const ExpPart& other) const;
  ExpPart scaled(const Rational& factor) const;

  friend bool operator==(const ExpPart&, const ExpPart&) = default;

 private:
  Terms terms_;
};

/// c * exp(E(t)) * t^a0 * prod_j (L_j t)^a_j in the internal t -> infinity
/// frame, where L_1 t = log t, L_2 t = log log t, ...
///
/// Instances are always canonical, so structural equality is functional
/// equality within the class.
class GrowthMonomial {
 public:
  /// The constant 1.
  GrowthMonomial();

  /// Normalizes raw fields: trims trailing zero log exponents, drops zero
  /// alphas and sums nothing else. Throws E_DOMAIN for a zero coefficient or
  /// a non-positive beta.
  static GrowthMonomial canonicalize(Rational coeff, ExpPart::Terms exp_terms,
                                     Rational pow_exp,
                                     std::vector<Rational> log_exps);

  static GrowthMonomial constant(Rational coeff);
  /// t^a.
  static GrowthMonomial power_of_t(Rational a);
  /// (L_level t)^exponent, level >= 1.
  static GrowthMonomial iterated_log(std::size_t level, Rational exponent = 1);
  /// exp(alpha * t^beta).
  static GrowthMonomial exponential(Rational alpha, Rational beta);

  const Rational& coeff() const noexcept { return coeff_; }
  const ExpPart& exp_part() const noexcept { return exp_part_; }
  const Rational& pow_exp() const noexcept { return pow_exp_; }
  const std::vector<Rational>& log_exps() const noexcept { return log_exps_; }

  /// Exponent of L_level (1-based); zero past the stored depth.
  Rational log_exp(std::size_t level) const;
  std::size_t log_depth() const noexcept { return log_exps_.size(); }

  bool is_constant() const;

  /// True when everything but the coefficient matches.
  bool same_structure(const GrowthMonomial& other) const;

  GrowthMonomial with_coeff(Rational coeff) const;

  friend bool operator==(const GrowthMonomial&,
                         const GrowthMonomial&) = default;

 private:
  GrowthMonomial(Rational coeff, ExpPart exp_part, Rational pow_exp,
                 std::vector<Rational> log_exps);

  Rational coeff_;
  ExpPart exp_part_;
  Rational pow_exp_;
  std::vector<Rational> log_exps_;
};

GrowthMonomial multiply(const GrowthMonomial& lhs, const GrowthMonomial& rhs);
GrowthMonomial reciprocal(const GrowthMonomial& m);
GrowthMonomial divide(const GrowthMonomial& lhs, const GrowthMonomial& rhs);

/// m^r. Throws E_DOMAIN when coeff^r is not an exact rational (negative base
/// under a fractional power, or an irrational root).
GrowthMonomial power(const GrowthMonomial& m, const Rational& r);

inline GrowthMonomial operator*(const GrowthMonomial& a,
                                const GrowthMonomial& b) {
  return multiply(a, b);
}
inline GrowthMonomial operator/(const GrowthMonomial& a,
                                const GrowthMonomial& b) {
  return divide(a, b);
}

/// Finite formal sum of monomials. Terms with the same structure are merged
/// on insertion and cancelled terms removed; the empty sum is zero.
class MonomialSum {
 public:
  MonomialSum() = default;
  MonomialSum(std::initializer_list<GrowthMonomial> terms);

  void add(const GrowthMonomial& term);
  /// Adds `coeff * term`; a zero coefficient is a no-op.
  void add(const GrowthMonomial& term, const Rational& coeff);
  void add(const MonomialSum& other);

  const std::vector<GrowthMonomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Multiplies every term by `factor`.
  MonomialSum times(const GrowthMonomial& factor) const;

  /// Order-insensitive equality.
  friend bool operator==(const MonomialSum& a, const MonomialSum& b);

 private:
  std::vector<GrowthMonomial> terms_;
};

MonomialSum operator+(MonomialSum lhs, const MonomialSum& rhs);

enum class Frame { kInfinity, kZeroPlus };

/// A monomial together with the limit point it is studied at. ZeroPlus
/// values are stored in the internal frame via t = 1/x.
struct Expression {
  Frame frame = Frame::kInfinity;
  GrowthMonomial value;

  friend bool operator==(const Expression&, const Expression&) = default;
};

/// Same function, opposite frame: f(x) at 0+ becomes f(1/t) at infinity and
/// back. An involution.
Expression substitute_reciprocal(const Expression& e);

}  // namespace growth

#endif  // GROWTH_MONOMIAL_HPP_
