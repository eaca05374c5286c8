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

#include "growth/format.hpp"

#include <vector>

namespace growth {
namespace {

std::string exponent_suffix(const Rational& r) {
  if (r == 1) return "";
  if (is_integer(r)) return "^" + to_string(r);
  return "^(" + to_string(r) + ")";
}

std::string log_name(std::size_t level, Frame frame) {
  // At 0+ the first level is u = log(1/x).
  std::string inner = frame == Frame::kInfinity ? "x" : "u";
  const std::size_t wraps = frame == Frame::kInfinity ? level : level - 1;
  std::string out = inner;
  for (std::size_t i = 0; i < wraps; ++i) out = "log(" + out + ")";
  return out;
}

// Joins signed terms as "a + b - c"; each element must carry its own sign.
std::string join_signed(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (!t.empty() && t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string exp_term_at_zero(const Rational& alpha, const Rational& beta) {
  // alpha * t^beta = alpha / x^beta.
  std::string out = alpha < 0 ? "-" : "";
  const BigInt num = abs(numerator_of(alpha));
  const BigInt den = denominator_of(alpha);
  out += num.str() + "/";
  if (den == 1) {
    out += "x" + exponent_suffix(beta);
  } else {
    out += "(" + den.str() + "*x" + exponent_suffix(beta) + ")";
  }
  return out;
}

std::string exp_sum(const ExpPart& e, Frame frame) {
  std::vector<std::string> terms;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [beta, alpha] = *it;
    if (frame == Frame::kInfinity) {
      terms.push_back(pretty(GrowthMonomial::canonicalize(alpha, {}, beta, {}),
                             Frame::kInfinity));
    } else {
      terms.push_back(exp_term_at_zero(alpha, beta));
    }
  }
  return join_signed(terms);
}

}  // namespace

std::string canonical_notation(const GrowthMonomial& m) {
  std::string out = "[" + to_string(m.coeff()) + "; {";
  bool first = true;
  for (const auto& [beta, alpha] : m.exp_part().terms()) {
    if (!first) out += ", ";
    out += to_string(beta) + ":" + to_string(alpha);
    first = false;
  }
  out += "}; " + to_string(m.pow_exp()) + "; (";
  for (std::size_t i = 0; i < m.log_exps().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(m.log_exps()[i]);
  }
  return out + ")]";
}

std::string pretty(const GrowthMonomial& m, Frame frame) {
  std::vector<std::string> factors;
  const Rational x_exp =
      frame == Frame::kInfinity ? m.pow_exp() : Rational(-m.pow_exp());
  if (x_exp != 0) factors.push_back("x" + exponent_suffix(x_exp));
  for (std::size_t j = 1; j <= m.log_depth(); ++j) {
    const Rational& a = m.log_exps()[j - 1];
    if (a != 0) factors.push_back(log_name(j, frame) + exponent_suffix(a));
  }
  if (!m.exp_part().empty()) {
    factors.push_back("exp(" + exp_sum(m.exp_part(), frame) + ")");
  }

  const Rational& c = m.coeff();
  const BigInt num = abs(numerator_of(c));
  const BigInt den = denominator_of(c);
  std::string out = c < 0 ? "-" : "";
  if (factors.empty()) {
    out += num.str();
  } else {
    if (num != 1) out += num.str() + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string pretty(const Expression& e) { return pretty(e.value, e.frame); }

std::string pretty(const MonomialSum& s, Frame frame) {
  std::vector<std::string> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) terms.push_back(pretty(t, frame));
  return join_signed(terms);
}

std::string_view frame_name(Frame frame) {
  return frame == Frame::kInfinity ? "inf" : "0+";
}

}  // namespace growth
