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

#ifndef GROWTH_FORMAT_HPP_
#define GROWTH_FORMAT_HPP_

#include <string>
#include <string_view>

#include "growth/monomial.hpp"

namespace growth {

/// Field notation "[coeff; {beta:alpha, ...}; a0; (a1, a2, ...)]" of the
/// internal representation.
std::string canonical_notation(const GrowthMonomial& m);

/// Surface syntax accepted by the parser. At infinity the factors read
/// x, log(x), log(log(x)), exp(...); at 0+ they read x, u = log(1/x),
/// log(u), ... and exp(alpha/x^beta).
std::string pretty(const GrowthMonomial& m, Frame frame);
std::string pretty(const Expression& e);
std::string pretty(const MonomialSum& s, Frame frame);

/// "inf" or "0+".
std::string_view frame_name(Frame frame);

}  // namespace growth

#endif  // GROWTH_FORMAT_HPP_
