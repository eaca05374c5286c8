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

#include "growth/error.hpp"

namespace growth {

std::string_view error_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
      return "E_DOMAIN";
    case ErrorKind::kSameOrder:
      return "E_SAME_ORDER";
    case ErrorKind::kZeroSum:
      return "E_ZERO_SUM";
    case ErrorKind::kPrecondition:
      return "E_PRECONDITION";
    case ErrorKind::kUnknownCase:
      return "E_UNKNOWN_CASE";
    case ErrorKind::kDivergent:
      return "E_DIVERGENT";
    case ErrorKind::kGrammar:
      return "E_GRAMMAR";
    case ErrorKind::kUnsupportedOrder:
      break;
  }
  return "E_UNSUPPORTED_ORDER";
}

}  // namespace growth
