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

#ifndef GROWTH_SERIALIZE_HPP_
#define GROWTH_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "growth/calculus.hpp"
#include "growth/error.hpp"
#include "growth/monomial.hpp"
#include "growth/numeric.hpp"
#include "growth/order.hpp"

namespace growth {

using Json = nlohmann::ordered_json;

/// {"num": n, "den": d}; each part is a JSON number when it fits in 64 bits
/// and a decimal string otherwise.
Json rational_object(const Rational& r);
/// A JSON number for integers that fit in 64 bits, "p/q" otherwise.
Json rational_scalar(const Rational& r);

Json to_json(const OrderRelation& rel);
Json to_json(const LimitValue& limit);
Json to_json(const GrowthMonomial& m, Frame frame);
Json to_json(const Expression& e);
Json to_json(const MonomialSum& s, Frame frame);
Json to_json(const LhopitalReport& r);
Json to_json(const AntiderivativeResult& r, const Expression& integrand);
Json to_json(const DerivationReport& r);
Json to_json(const NumericReport& r);
Json to_json(const Error& e);

}  // namespace growth

#endif  // GROWTH_SERIALIZE_HPP_
