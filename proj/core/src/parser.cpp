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

#include "growth/parser.hpp"

#include <cctype>
#include <string>

#include "growth/error.hpp"
#include "growth/rational.hpp"

namespace growth {
namespace {

struct Parsed {
  GrowthMonomial value;
  Span span;
};

bool is_ident_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Parser {
 public:
  Parser(std::string_view input, Frame frame) : in_(input), frame_(frame) {}

  Expression run() {
    skip_ws();
    if (at_end()) fail(ErrorKind::kGrammar, {0, 0}, "empty expression");
    Parsed e = parse_mul();
    skip_ws();
    if (!at_end()) {
      const char c = in_[pos_];
      if (c == '+' || c == '-') {
        fail(ErrorKind::kGrammar, here(),
             "sums are only allowed inside exp(...)");
      }
      fail(ErrorKind::kGrammar, here(),
           "unexpected '" + std::string(1, c) + "'");
    }
    return Expression{frame_, std::move(e.value)};
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, Span span, const std::string& msg) {
    throw ParseError(kind, span, msg);
  }

  bool at_end() const { return pos_ >= in_.size(); }

  Span here() const {
    return {pos_, std::min(pos_ + 1, in_.size())};
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(in_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, std::string_view context) {
    if (accept(c)) return;
    skip_ws();
    const std::string found =
        at_end() ? "end of input" : "'" + std::string(1, in_[pos_]) + "'";
    fail(ErrorKind::kGrammar, here(),
         "expected '" + std::string(1, c) + "' " + std::string(context) +
             ", found " + found);
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(in_[pos_])) ++pos_;
    return in_.substr(start, pos_ - start);
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(in_[pos_])) ++pos_;
    if (start == pos_) {
      fail(ErrorKind::kGrammar, here(), "expected an integer");
    }
    if (!at_end() && in_[pos_] == '.') {
      fail(ErrorKind::kGrammar, {start, pos_ + 1},
           "decimal literals are reserved; write a rational such as 1/2");
    }
    return BigInt(std::string(in_.substr(start, pos_ - start)));
  }

  // Exact value of x at the frame in terms of t.
  GrowthMonomial x_value() const {
    return GrowthMonomial::power_of_t(frame_ == Frame::kInfinity ? 1 : -1);
  }

  Parsed parse_mul() {
    skip_ws();
    const std::size_t start = pos_;
    const bool negate = accept('-');
    Parsed acc = parse_pow();
    for (;;) {
      if (accept('*')) {
        Parsed rhs = parse_pow();
        acc.value = multiply(acc.value, rhs.value);
      } else if (accept('/')) {
        Parsed rhs = parse_pow();
        acc.value = divide(acc.value, rhs.value);
      } else {
        break;
      }
    }
    if (negate) acc.value = acc.value.with_coeff(-acc.value.coeff());
    acc.span = {start, pos_};
    return acc;
  }

  Rational exponent() {
    skip_ws();
    if (accept('(')) {
      const bool negative = accept('-');
      BigInt num = integer();
      BigInt den = 1;
      if (accept('/')) {
        const std::size_t den_start = pos_;
        den = integer();
        if (den == 0) {
          fail(ErrorKind::kGrammar, {den_start, pos_},
               "zero denominator in exponent");
        }
      }
      expect(')', "to close the exponent");
      Rational r(num, den);
      return negative ? Rational(-r) : r;
    }
    const bool negative = accept('-');
    Rational r(integer());
    return negative ? Rational(-r) : r;
  }

  Parsed parse_pow() {
    skip_ws();
    const std::size_t start = pos_;
    Parsed base = parse_atom();
    if (!accept('^')) return base;
    const Rational r = exponent();
    const Span span{start, pos_};
    try {
      return Parsed{power(base.value, r), span};
    } catch (const Error& e) {
      fail(e.kind(), span, e.what());
    }
  }

  Parsed parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end()) {
      fail(ErrorKind::kGrammar, {pos_, pos_}, "unexpected end of input");
    }
    const char c = in_[pos_];
    if (is_digit(c)) {
      BigInt n = integer();
      if (n == 0) {
        fail(ErrorKind::kDomain, {start, pos_},
             "zero is not a growth monomial");
      }
      return Parsed{GrowthMonomial::constant(Rational(n)), {start, pos_}};
    }
    if (c == '(') {
      ++pos_;
      Parsed inner = parse_mul();
      expect(')', "to close the parenthesis");
      inner.span = {start, pos_};
      return inner;
    }
    if (!is_ident_char(c)) {
      fail(ErrorKind::kGrammar, here(),
           "unexpected '" + std::string(1, c) + "'");
    }
    const std::string_view name = identifier();
    const Span name_span{start, pos_};
    if (name == "x") return Parsed{x_value(), name_span};
    if (name == "u") {
      if (frame_ != Frame::kZeroPlus) {
        fail(ErrorKind::kDomain, name_span,
             "'u' stands for log(1/x) and is only available at 0+; "
             "write log(x) at infinity");
      }
      return Parsed{GrowthMonomial::iterated_log(1), name_span};
    }
    if (name == "log") return parse_log(start);
    if (name == "exp") return parse_exp(start);
    fail(ErrorKind::kGrammar, name_span,
         "unknown identifier '" + std::string(name) + "'");
  }

  Parsed parse_log(std::size_t start) {
    expect('(', "after log");
    Parsed arg = parse_mul();
    expect(')', "to close log(...)");
    const Span span{start, pos_};
    const GrowthMonomial& v = arg.value;

    if (v == GrowthMonomial::power_of_t(1)) {
      return Parsed{GrowthMonomial::iterated_log(1), span};
    }
    if (v == GrowthMonomial::power_of_t(-1)) {
      fail(ErrorKind::kDomain, arg.span,
           frame_ == Frame::kZeroPlus
               ? "log(x) is negative near 0+; use u = log(1/x)"
               : "log(1/x) is negative at infinity; use log(x)");
    }
    // log(L_k) = L_{k+1}.
    if (v.coeff() == 1 && v.exp_part().empty() && v.pow_exp() == 0 &&
        v.log_depth() > 0 && v.log_exps().back() == 1) {
      bool unit = true;
      for (std::size_t j = 1; j < v.log_depth(); ++j) {
        if (v.log_exp(j) != 0) unit = false;
      }
      if (unit) {
        return Parsed{GrowthMonomial::iterated_log(v.log_depth() + 1), span};
      }
    }
    fail(ErrorKind::kGrammar, arg.span,
         std::string("log(...) only accepts ") +
             (frame_ == Frame::kInfinity ? "x" : "1/x or u") +
             " or a bare iterated logarithm");
  }

  Parsed parse_exp(std::size_t start) {
    expect('(', "after exp");
    ExpPart::Terms terms;
    GrowthMonomial rewritten;  // exp(q * L_k) factors
    bool negate = false;
    for (;;) {
      Parsed term = parse_mul();
      GrowthMonomial v = term.value;
      if (negate) v = v.with_coeff(-v.coeff());
      absorb_exp_term(v, term.span, terms, rewritten);
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        break;
      }
    }
    expect(')', "to close exp(...)");
    const Span span{start, pos_};
    return Parsed{
        multiply(GrowthMonomial::canonicalize(1, std::move(terms), 0, {}),
                 rewritten),
        span};
  }

  void absorb_exp_term(const GrowthMonomial& v, Span span,
                       ExpPart::Terms& terms, GrowthMonomial& rewritten) {
    if (!v.exp_part().empty()) {
      fail(ErrorKind::kUnsupportedOrder, span,
           "nested exponentials are outside the supported orders");
    }
    if (!v.log_exps().empty()) {
      // q * L_k: exp(q log x) = x^q, exp(q L_{k+1}) = (L_k)^q.
      bool unit = v.pow_exp() == 0 && v.log_exps().back() == 1;
      for (std::size_t j = 1; unit && j < v.log_depth(); ++j) {
        if (v.log_exp(j) != 0) unit = false;
      }
      if (!unit) {
        fail(ErrorKind::kUnsupportedOrder, span,
             "exp of this logarithmic term lies between the power and "
             "exponential orders, which are not represented");
      }
      const std::size_t k = v.log_depth();
      rewritten = multiply(rewritten,
                           k == 1 ? GrowthMonomial::power_of_t(v.coeff())
                                  : GrowthMonomial::iterated_log(k - 1, v.coeff()));
      return;
    }
    if (v.pow_exp() == 0) {
      fail(ErrorKind::kGrammar, span,
           "exp of a constant would introduce an irrational factor");
    }
    if (v.pow_exp() < 0) {
      fail(ErrorKind::kGrammar, span,
           frame_ == Frame::kInfinity
               ? "exp terms must be alpha*x^beta with beta > 0 at infinity"
               : "exp terms must be alpha/x^beta with beta > 0 at 0+");
    }
    terms[v.pow_exp()] += v.coeff();
  }

  std::string_view in_;
  Frame frame_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view input, Frame frame) {
  return Parser(input, frame).run();
}

}  // namespace growth
