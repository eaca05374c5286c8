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

#include "growth/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace growth {
namespace {

// ln|n| for a nonzero integer of any size.
double log_abs_integer(const BigInt& n) {
  BigInt a = abs(n);
  const std::size_t bits = msb(a) + 1;
  if (bits <= 900) return std::log(a.convert_to<double>());
  const std::size_t shift = bits - 64;
  BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

BigInt int_pow(const BigInt& base, const BigInt& exponent) {
  BigInt result = 1;
  BigInt b = base;
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  auto digits = [&](BigInt& out) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) return false;
    out = BigInt(text.substr(start, i - start));
    return true;
  };
  BigInt num;
  BigInt den = 1;
  if (!digits(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den) || den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  if (negative) num = -num;
  return Rational(num, den);
}

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  const double direct = r.convert_to<double>();
  if (std::isnormal(direct)) return direct;
  const double mag = std::exp(log_abs(r));
  return r.sign() < 0 ? -mag : mag;
}

double log_abs(const Rational& r) {
  if (r == 0) return -std::numeric_limits<double>::infinity();
  const double direct = r.convert_to<double>();
  if (std::isnormal(direct)) return std::log(std::abs(direct));
  return log_abs_integer(numerator_of(r)) - log_abs_integer(denominator_of(r));
}

std::optional<BigInt> exact_root(const BigInt& value, unsigned k) {
  if (value < 0 || k == 0) return std::nullopt;
  if (value < 2 || k == 1) return value;
  // Bisection on [0, 2^(bits/k + 1)].
  const std::size_t bits = msb(value) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (int_pow(mid, k) <= value) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (int_pow(lo, k) == value) return lo;
  return std::nullopt;
}

std::optional<Rational> exact_power(const Rational& base,
                                    const Rational& exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw std::domain_error("zero to a negative power");
    return Rational(0);
  }
  const BigInt p = numerator_of(exponent);
  const BigInt q = denominator_of(exponent);
  if (q > std::numeric_limits<unsigned>::max()) return std::nullopt;
  const unsigned root = q.convert_to<unsigned>();

  BigInt num = numerator_of(base);
  BigInt den = denominator_of(base);
  bool negative = num < 0;
  if (negative) {
    // Odd roots of negatives are real, but the sign convention for
    // fractional exponents is ambiguous; only integers are admitted.
    if (root != 1) return std::nullopt;
    num = -num;
  }
  // gcd(p, q) = 1, so base^(p/q) is rational iff base^(1/q) is.
  auto num_root = exact_root(num, root);
  auto den_root = exact_root(den, root);
  if (!num_root || !den_root) return std::nullopt;

  const BigInt abs_p = abs(p);
  BigInt n = int_pow(*num_root, abs_p);
  BigInt d = int_pow(*den_root, abs_p);
  if (negative && (abs_p & 1) != 0) n = -n;
  if (p < 0) std::swap(n, d);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

}  // namespace growth
