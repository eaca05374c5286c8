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

#ifndef GROWTH_PARSER_HPP_
#define GROWTH_PARSER_HPP_

#include <string_view>

#include "growth/monomial.hpp"

namespace growth {

/// Parses the expression mini-language into a canonical Expression.
///
///   expr     := mul
///   mul      := '-'? pow (('*' | '/') pow)*
///   pow      := atom ('^' exponent)?
///   exponent := '-'? integer | '(' '-'? integer ('/' integer)? ')'
///   atom     := 'x' | integer | 'u' | 'log' '(' expr ')'
///             | 'exp' '(' sum ')' | '(' expr ')'
///   sum      := mul (('+' | '-') mul)*
///
/// `u` means log(1/x) and exists only at 0+. log accepts x (1/x at 0+) or a
/// bare iterated logarithm; exp accepts sums of alpha * x^beta that grow
/// toward the frame point, plus q * log(...) terms which are rewritten to
/// powers. Throws ParseError with kind E_GRAMMAR, E_UNSUPPORTED_ORDER or
/// E_DOMAIN and the byte span of the offending construct.
Expression parse(std::string_view input, Frame frame);

}  // namespace growth

#endif  // GROWTH_PARSER_HPP_
