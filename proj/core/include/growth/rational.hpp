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

#ifndef GROWTH_RATIONAL_HPP_
#define GROWTH_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace growth {

/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }

/// "p" or "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'); nullopt on malformed input
/// or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& r);

/// ln|r| without overflowing for very large numerators or denominators.
double log_abs(const Rational& r);

/// base^exponent when the result is rational; nullopt when it would be
/// irrational or complex (negative base with even root). Throws on 0^negative.
std::optional<Rational> exact_power(const Rational& base,
                                    const Rational& exponent);

/// Exact integer k-th root of a non-negative integer, if one exists.
std::optional<BigInt> exact_root(const BigInt& value, unsigned k);

}  // namespace growth

#endif  // GROWTH_RATIONAL_HPP_
