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

#include "growth/serialize.hpp"

#include <cmath>
#include <limits>

#include "growth/format.hpp"

namespace growth {
namespace {

Json integer_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

// Doubles that overflowed or are NaN become null rather than invalid JSON.
Json number_json(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

Json rational_object(const Rational& r) {
  return Json{{"num", integer_json(numerator_of(r))},
              {"den", integer_json(denominator_of(r))}};
}

Json rational_scalar(const Rational& r) {
  if (is_integer(r)) {
    Json j = integer_json(numerator_of(r));
    if (j.is_number()) return j;
  }
  return to_string(r);
}

Json to_json(const OrderRelation& rel) {
  Json j{{"relation", relation_name(rel.kind)}};
  if (rel.is_same()) j["ratio"] = rational_object(rel.ratio);
  return j;
}

Json to_json(const LimitValue& limit) {
  Json j{{"limit", limit_name(limit.kind)}, {"sign", limit.sign}};
  if (limit.kind == LimitValue::Kind::kFinite) {
    j["value"] = rational_object(limit.value);
  }
  return j;
}

Json to_json(const GrowthMonomial& m, Frame frame) {
  return Json{{"pretty", pretty(m, frame)},
              {"canonical", canonical_notation(m)}};
}

Json to_json(const Expression& e) {
  Json j{{"frame", frame_name(e.frame)}};
  j.update(to_json(e.value, e.frame));
  return j;
}

Json to_json(const MonomialSum& s, Frame frame) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(to_json(t, frame));
  return Json{{"frame", frame_name(frame)},
              {"pretty", pretty(s, frame)},
              {"terms", std::move(terms)}};
}

Json to_json(const LhopitalReport& r) {
  return Json{{"consistent", r.consistent},
              {"direct", to_json(r.direct)},
              {"derivative_based", to_json(r.derivative_based)}};
}

Json to_json(const AntiderivativeResult& r, const Expression& integrand) {
  Json j{{"antiderivative", pretty(r.antiderivative, Frame::kZeroPlus)}};
  if (r.rectangle) {
    j["rectangle"] = Json{{"s", rational_scalar(r.rectangle->s)},
                          {"const", rational_scalar(r.rectangle->constant)}};
  } else {
    j["rectangle"] = nullptr;
  }
  j["exact"] = r.exact;
  j["integrand"] = pretty(integrand);
  j["canonical"] = canonical_notation(r.antiderivative);
  j["branch"] = std::string(1, r.branch);
  j["validity"] = r.validity;
  return j;
}

Json to_json(const DerivationReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"statement", s.statement},
                         {"before", pretty(s.before, r.frame)},
                         {"after", pretty(s.after, r.frame)},
                         {"justification", s.justification},
                         {"verified", s.verified}});
  }
  return Json{{"case", r.case_id},
              {"n", r.n},
              {"frame", frame_name(r.frame)},
              {"p", to_json(r.p, r.frame)},
              {"q", to_json(r.q, r.frame)},
              {"dp", pretty(r.dp, r.frame)},
              {"dq", pretty(r.dq, r.frame)},
              {"dominant_ratio", to_json(r.dominant_ratio, r.frame)},
              {"steps", std::move(steps)},
              {"final_v", to_json(r.final_v, r.frame)},
              {"verdict", to_json(r.verdict)},
              {"direct", to_json(r.direct)},
              {"all_verified", r.all_verified()},
              {"note", r.note}};
}

Json to_json(const NumericReport& r) {
  Json samples = Json::array();
  for (const auto& [x, v] : r.samples) {
    samples.push_back(Json::array({number_json(x), number_json(v)}));
  }
  Json errors = Json::array();
  for (double e : r.errors) errors.push_back(number_json(e));
  return Json{{"verdict", verdict_name(r.verdict)},
              {"criterion", r.criterion},
              {"samples", std::move(samples)},
              {"errors", std::move(errors)}};
}

Json to_json(const Error& e) {
  Json j{{"kind", std::string(error_code(e.kind()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["span"] = Json::array({pe->span().begin, pe->span().end});
  }
  return Json{{"error", std::move(j)}};
}

}  // namespace growth
