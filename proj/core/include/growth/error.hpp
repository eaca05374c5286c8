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

#ifndef GROWTH_ERROR_HPP_
#define GROWTH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace growth {

enum class ErrorKind {
  kDomain,            // E_DOMAIN
  kSameOrder,         // E_SAME_ORDER
  kZeroSum,           // E_ZERO_SUM
  kPrecondition,      // E_PRECONDITION
  kUnknownCase,       // E_UNKNOWN_CASE
  kDivergent,         // E_DIVERGENT
  kGrammar,           // E_GRAMMAR
  kUnsupportedOrder,  // E_UNSUPPORTED_ORDER
};

/// Machine-readable tag, e.g. "E_DOMAIN".
std::string_view error_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Half-open byte range [begin, end) into the parser input.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, Span span, const std::string& message)
      : Error(kind, message), span_(span) {}

  Span span() const noexcept { return span_; }

 private:
  Span span_;
};

}  // namespace growth

#endif  // GROWTH_ERROR_HPP_
