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

#include "growth/monomial.hpp"

#include <algorithm>
#include <string>

#include "growth/error.hpp"

namespace growth {

ExpPart::ExpPart(Terms terms) {
  for (auto& [beta, alpha] : terms) {
    if (beta <= 0) {
      throw Error(ErrorKind::kDomain,
                  "exponential term needs a positive power of t, got t^" +
                      to_string(beta));
    }
    if (alpha != 0) terms_.emplace(beta, alpha);
  }
}

Rational ExpPart::coefficient(const Rational& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExpPart ExpPart::operator+(const ExpPart& other) const {
  Terms sum = terms_;
  for (const auto& [beta, alpha] : other.terms_) sum[beta] += alpha;
  return ExpPart(std::move(sum));
}

ExpPart ExpPart::operator-(const ExpPart& other) const {
  return *this + other.scaled(-1);
}

ExpPart ExpPart::scaled(const Rational& factor) const {
  Terms out;
  if (factor == 0) return ExpPart(std::move(out));
  for (const auto& [beta, alpha] : terms_) out.emplace(beta, alpha * factor);
  return ExpPart(std::move(out));
}

GrowthMonomial::GrowthMonomial() : coeff_(1), pow_exp_(0) {}

GrowthMonomial::GrowthMonomial(Rational coeff, ExpPart exp_part,
                               Rational pow_exp, std::vector<Rational> log_exps)
    : coeff_(std::move(coeff)),
      exp_part_(std::move(exp_part)),
      pow_exp_(std::move(pow_exp)),
      log_exps_(std::move(log_exps)) {
  while (!log_exps_.empty() && log_exps_.back() == 0) log_exps_.pop_back();
}

GrowthMonomial GrowthMonomial::canonicalize(Rational coeff,
                                            ExpPart::Terms exp_terms,
                                            Rational pow_exp,
                                            std::vector<Rational> log_exps) {
  if (coeff == 0) {
    throw Error(ErrorKind::kDomain, "a growth monomial needs a nonzero coefficient");
  }
  return GrowthMonomial(std::move(coeff), ExpPart(std::move(exp_terms)),
                        std::move(pow_exp), std::move(log_exps));
}

GrowthMonomial GrowthMonomial::constant(Rational coeff) {
  return canonicalize(std::move(coeff), {}, 0, {});
}

GrowthMonomial GrowthMonomial::power_of_t(Rational a) {
  return canonicalize(1, {}, std::move(a), {});
}

GrowthMonomial GrowthMonomial::iterated_log(std::size_t level,
                                            Rational exponent) {
  if (level == 0) {
    throw Error(ErrorKind::kDomain, "iterated logarithm levels start at 1");
  }
  std::vector<Rational> logs(level, Rational(0));
  logs.back() = std::move(exponent);
  return canonicalize(1, {}, 0, std::move(logs));
}

GrowthMonomial GrowthMonomial::exponential(Rational alpha, Rational beta) {
  ExpPart::Terms terms;
  terms.emplace(std::move(beta), std::move(alpha));
  return canonicalize(1, std::move(terms), 0, {});
}

Rational GrowthMonomial::log_exp(std::size_t level) const {
  if (level == 0 || level > log_exps_.size()) return 0;
  return log_exps_[level - 1];
}

bool GrowthMonomial::is_constant() const {
  return exp_part_.empty() && pow_exp_ == 0 && log_exps_.empty();
}

bool GrowthMonomial::same_structure(const GrowthMonomial& other) const {
  return exp_part_ == other.exp_part_ && pow_exp_ == other.pow_exp_ &&
         log_exps_ == other.log_exps_;
}

GrowthMonomial GrowthMonomial::with_coeff(Rational coeff) const {
  if (coeff == 0) {
    throw Error(ErrorKind::kDomain, "a growth monomial needs a nonzero coefficient");
  }
  GrowthMonomial out = *this;
  out.coeff_ = std::move(coeff);
  return out;
}

namespace {

std::vector<Rational> add_logs(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

GrowthMonomial multiply(const GrowthMonomial& lhs, const GrowthMonomial& rhs) {
  ExpPart::Terms exp_terms = lhs.exp_part().terms();
  for (const auto& [beta, alpha] : rhs.exp_part().terms()) {
    exp_terms[beta] += alpha;
  }
  return GrowthMonomial::canonicalize(
      lhs.coeff() * rhs.coeff(), std::move(exp_terms),
      lhs.pow_exp() + rhs.pow_exp(), add_logs(lhs.log_exps(), rhs.log_exps()));
}

GrowthMonomial reciprocal(const GrowthMonomial& m) {
  std::vector<Rational> logs;
  logs.reserve(m.log_exps().size());
  for (const auto& a : m.log_exps()) logs.push_back(-a);
  return GrowthMonomial::canonicalize(Rational(1) / m.coeff(),
                                      m.exp_part().scaled(-1).terms(),
                                      -m.pow_exp(), std::move(logs));
}

GrowthMonomial divide(const GrowthMonomial& lhs, const GrowthMonomial& rhs) {
  return multiply(lhs, reciprocal(rhs));
}

GrowthMonomial power(const GrowthMonomial& m, const Rational& r) {
  if (r == 0) return GrowthMonomial();
  if (m.coeff() < 0 && !is_integer(r)) {
    throw Error(ErrorKind::kDomain,
                "negative coefficient " + to_string(m.coeff()) +
                    " under the fractional power " + to_string(r));
  }
  auto coeff = exact_power(m.coeff(), r);
  if (!coeff) {
    throw Error(ErrorKind::kDomain, "coefficient power " + to_string(m.coeff()) +
                                        "^(" + to_string(r) +
                                        ") is not rational");
  }
  std::vector<Rational> logs;
  logs.reserve(m.log_exps().size());
  for (const auto& a : m.log_exps()) logs.push_back(a * r);
  return GrowthMonomial::canonicalize(std::move(*coeff),
                                      m.exp_part().scaled(r).terms(),
                                      m.pow_exp() * r, std::move(logs));
}

MonomialSum::MonomialSum(std::initializer_list<GrowthMonomial> terms) {
  for (const auto& t : terms) add(t);
}

void MonomialSum::add(const GrowthMonomial& term) { add(term, 1); }

void MonomialSum::add(const GrowthMonomial& term, const Rational& coeff) {
  if (coeff == 0) return;
  const Rational scaled = term.coeff() * coeff;
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.same_structure(term);
  });
  if (it == terms_.end()) {
    terms_.push_back(term.with_coeff(scaled));
    return;
  }
  const Rational merged = it->coeff() + scaled;
  if (merged == 0) {
    terms_.erase(it);
  } else {
    *it = it->with_coeff(merged);
  }
}

void MonomialSum::add(const MonomialSum& other) {
  for (const auto& t : other.terms_) add(t);
}

MonomialSum MonomialSum::times(const GrowthMonomial& factor) const {
  MonomialSum out;
  for (const auto& t : terms_) out.add(multiply(t, factor));
  return out;
}

bool operator==(const MonomialSum& a, const MonomialSum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  return std::all_of(a.terms_.begin(), a.terms_.end(), [&](const auto& t) {
    return std::find(b.terms_.begin(), b.terms_.end(), t) != b.terms_.end();
  });
}

MonomialSum operator+(MonomialSum lhs, const MonomialSum& rhs) {
  lhs.add(rhs);
  return lhs;
}

Expression substitute_reciprocal(const Expression& e) {
  return Expression{
      e.frame == Frame::kInfinity ? Frame::kZeroPlus : Frame::kInfinity,
      e.value};
}

}  // namespace growth
