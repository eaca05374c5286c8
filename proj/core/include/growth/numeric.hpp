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

#ifndef GROWTH_NUMERIC_HPP_
#define GROWTH_NUMERIC_HPP_

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "growth/calculus.hpp"
#include "growth/monomial.hpp"

namespace growth {

/// ln|M(t)| = ln|c| + E(t) + a0 ln t + sum_j a_j ln(L_j t), in doubles.
/// Throws E_DOMAIN when t <= 0 or an iterated log that M uses is not
/// positive at t.
double eval_log(const GrowthMonomial& m, double t);

/// eval_log(lhs, t) - eval_log(rhs, t), accumulated component by component
/// from the exact exponent differences so that equal parts cancel exactly.
double delta_log(const GrowthMonomial& lhs, const GrowthMonomial& rhs, double t);

/// Smallest t at which L_1 .. L_depth are all positive (0 for depth 0).
/// Throws E_DOMAIN beyond the depth a double can reach.
double log_domain_threshold(std::size_t depth);

/// Geometric grid approaching the frame point. At infinity the endpoints
/// are values of t = x with first < last; at 0+ they are values of x with
/// first > last.
class SampleGrid {
 public:
  static constexpr int kMinCount = 8;
  /// |E(t)| stays at or below this on a clamped grid.
  static constexpr double kExpCeiling = 1e250;

  /// Throws E_DOMAIN on non-positive endpoints, endpoints that do not
  /// approach the frame point, or count < 8.
  static SampleGrid make(Frame frame, double first, double last, int count);

  Frame frame() const { return frame_; }
  double first() const { return first_; }
  double last() const { return last_; }
  int count() const { return count_; }

  /// Internal t values in increasing order.
  std::vector<double> points() const;

  /// The frame variable x for an internal t.
  double frame_value(double t) const {
    return frame_ == Frame::kInfinity ? t : 1.0 / t;
  }

  /// Narrows the grid so every iterated log used by `monomials` is positive
  /// and every exponential part satisfies |E(t)| <= kExpCeiling. Throws
  /// E_DOMAIN when nothing is left.
  SampleGrid clamped_for(std::span<const GrowthMonomial> monomials) const;

 private:
  SampleGrid(Frame frame, double first, double last, int count)
      : frame_(frame), first_(first), last_(last), count_(count) {}

  Frame frame_;
  double first_;
  double last_;
  int count_;
};

enum class Verdict { kPass, kFail, kInconclusive };

/// "PASS" / "FAIL" / "INCONCLUSIVE".
std::string verdict_name(Verdict v);

struct NumericReport {
  Verdict verdict = Verdict::kInconclusive;
  std::string criterion;
  /// (frame variable, measured quantity) pairs.
  std::vector<std::pair<double, double>> samples;
  std::vector<double> errors;
};

/// Samples Delta(t) = ln|M1| - ln|M2| on the (auto-clamped) grid and checks
/// the trend predicted by compare_order: strictly monotone over the last 5
/// samples and past the midpoint value for Greater/Smaller, constant at
/// ln|ratio| within 1e-9 for Same. A trend that is not decisive either way
/// is INCONCLUSIVE.
NumericReport verify_order_numeric(const GrowthMonomial& lhs,
                                   const GrowthMonomial& rhs,
                                   const SampleGrid& grid);

/// Adaptive Simpson quadrature with a relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-10, int max_depth = 60);

/// Checks an antiderivative near 0+ at each sample x in (0, 0.2]:
/// F'(x)/y(x) -> 1 as x decreases, and the quadrature of y over [x/10, x]
/// against F(x) - F(x/10) (1e-8 relative for exact results, shrinking
/// discrepancy otherwise). Throws E_DOMAIN for samples outside (0, 0.2].
NumericReport verify_antiderivative_numeric(const Expression& integrand,
                                            const AntiderivativeResult& r,
                                            std::span<const double> xs);

}  // namespace growth

#endif  // GROWTH_NUMERIC_HPP_
