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

#include "growth/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "growth/error.hpp"
#include "growth/order.hpp"

namespace growth {
namespace {

// L_1 t .. L_depth t, each required to be positive.
std::vector<double> iterated_logs(double t, std::size_t depth) {
  if (!(t > 0.0)) {
    throw Error(ErrorKind::kDomain, "sample point must be positive");
  }
  std::vector<double> logs;
  logs.reserve(depth);
  double v = t;
  for (std::size_t j = 1; j <= depth; ++j) {
    v = std::log(v);
    if (!(v > 0.0)) {
      throw Error(ErrorKind::kDomain,
                  "iterated logarithm L_" + std::to_string(j) +
                      " is not positive at t = " + std::to_string(t));
    }
    logs.push_back(v);
  }
  return logs;
}

// Double-precision copy of a monomial for repeated evaluation.
class CompiledMonomial {
 public:
  explicit CompiledMonomial(const GrowthMonomial& m)
      : log_coeff_(log_abs(m.coeff())), pow_(to_double(m.pow_exp())) {
    for (const auto& [beta, alpha] : m.exp_part().terms()) {
      exp_terms_.emplace_back(to_double(alpha), to_double(beta));
    }
    for (const auto& a : m.log_exps()) logs_.push_back(to_double(a));
  }

  double eval_log(double t) const {
    const std::vector<double> logs = iterated_logs(t, logs_.size());
    const double log_t = std::log(t);
    double sum = log_coeff_ + pow_ * log_t;
    for (const auto& [alpha, beta] : exp_terms_) {
      sum += alpha * std::exp(beta * log_t);
    }
    for (std::size_t j = 0; j < logs_.size(); ++j) {
      if (logs_[j] != 0.0) sum += logs_[j] * std::log(logs[j]);
    }
    return sum;
  }

  /// ln|M(t)| - ln|M(t_ref)| where log_ratio = ln(t / t_ref), without
  /// forming the two large logarithms separately.
  double log_ratio(double t, double t_ref, double log_ratio) const {
    double sum = pow_ * log_ratio;
    const double log_t_ref = std::log(t_ref);
    for (const auto& [alpha, beta] : exp_terms_) {
      sum += alpha * std::exp(beta * log_t_ref) * std::expm1(beta * log_ratio);
    }
    if (!logs_.empty()) {
      const std::vector<double> at = iterated_logs(t, logs_.size());
      const std::vector<double> ref = iterated_logs(t_ref, logs_.size());
      for (std::size_t j = 0; j < logs_.size(); ++j) {
        if (logs_[j] == 0.0) continue;
        const double d = j == 0 ? std::log1p(log_ratio / log_t_ref)
                                : std::log(at[j] / ref[j]);
        sum += logs_[j] * d;
      }
    }
    return sum;
  }

 private:
  double log_coeff_;
  double pow_;
  std::vector<std::pair<double, double>> exp_terms_;
  std::vector<double> logs_;
};

double exp_part_value(const ExpPart& e, double log_t) {
  double sum = 0.0;
  for (const auto& [beta, alpha] : e.terms()) {
    sum += to_double(alpha) * std::exp(to_double(beta) * log_t);
  }
  return sum;
}

bool strictly_increasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

bool strictly_decreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

// Non-increasing up to rounding, with an actual decrease overall.
bool shrinking(const std::vector<double>& v) {
  if (v.size() < 2) return false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] <= v[i - 1] * (1.0 + 1e-9) + 1e-15)) return false;
  }
  return v.back() < v.front();
}

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double eps,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  const double floor =
      4.0 * std::numeric_limits<double>::epsilon() *
      (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps ||
      std::abs(delta) <= floor || !(a < m && m < b)) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double simpson_with_abs_tol(const std::function<double(double)>& f, double a,
                            double b, double eps, int max_depth) {
  // Start from 16 panels so narrow features are not missed by the first
  // three-point estimate.
  constexpr int kPanels = 16;
  const double h = (b - a) / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + i * h;
    const double hi = i + 1 == kPanels ? b : lo + h;
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    total += simpson_step(f, lo, hi, flo, fm, fhi, whole, eps / kPanels,
                          max_depth);
  }
  return total;
}

}  // namespace

double log_domain_threshold(std::size_t depth) {
  double t = 0.0;
  if (depth >= 1) t = 1.0;
  for (std::size_t j = 2; j <= depth; ++j) t = std::exp(t);
  if (!std::isfinite(t) || depth > 4) {
    throw Error(ErrorKind::kDomain,
                "iterated logarithms deeper than 4 cannot be evaluated in "
                "double precision");
  }
  return t;
}

double eval_log(const GrowthMonomial& m, double t) {
  const std::vector<double> logs = iterated_logs(t, m.log_depth());
  const double log_t = std::log(t);
  double sum = log_abs(m.coeff()) + exp_part_value(m.exp_part(), log_t) +
               to_double(m.pow_exp()) * log_t;
  for (std::size_t j = 1; j <= m.log_depth(); ++j) {
    const Rational& a = m.log_exps()[j - 1];
    if (a != 0) sum += to_double(a) * std::log(logs[j - 1]);
  }
  return sum;
}

double delta_log(const GrowthMonomial& lhs, const GrowthMonomial& rhs,
                 double t) {
  const std::size_t depth = std::max(lhs.log_depth(), rhs.log_depth());
  const std::vector<double> logs = iterated_logs(t, depth);
  const double log_t = std::log(t);
  double sum = log_abs(lhs.coeff() / rhs.coeff());
  sum += exp_part_value(lhs.exp_part() - rhs.exp_part(), log_t);
  sum += to_double(lhs.pow_exp() - rhs.pow_exp()) * log_t;
  for (std::size_t j = 1; j <= depth; ++j) {
    const Rational a = lhs.log_exp(j) - rhs.log_exp(j);
    if (a != 0) sum += to_double(a) * std::log(logs[j - 1]);
  }
  return sum;
}

SampleGrid SampleGrid::make(Frame frame, double first, double last, int count) {
  if (count < kMinCount) {
    throw Error(ErrorKind::kDomain, "a sample grid needs at least 8 points");
  }
  if (!(first > 0.0) || !(last > 0.0) || !std::isfinite(first) ||
      !std::isfinite(last)) {
    throw Error(ErrorKind::kDomain, "grid endpoints must be positive and finite");
  }
  const bool approaches = frame == Frame::kInfinity ? first < last : first > last;
  if (!approaches) {
    throw Error(ErrorKind::kDomain,
                frame == Frame::kInfinity
                    ? "grid at infinity must run from smaller to larger t"
                    : "grid at 0+ must run from larger to smaller x");
  }
  return SampleGrid(frame, first, last, count);
}

std::vector<double> SampleGrid::points() const {
  double lo = frame_ == Frame::kInfinity ? first_ : 1.0 / first_;
  double hi = frame_ == Frame::kInfinity ? last_ : 1.0 / last_;
  const double a = std::log(lo);
  const double b = std::log(hi);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (int i = 0; i < count_; ++i) {
    out.push_back(i + 1 == count_ ? hi
                                  : std::exp(a + (b - a) * i / (count_ - 1)));
  }
  out.front() = lo;
  return out;
}

SampleGrid SampleGrid::clamped_for(
    std::span<const GrowthMonomial> monomials) const {
  double lo = frame_ == Frame::kInfinity ? first_ : 1.0 / first_;
  double hi = frame_ == Frame::kInfinity ? last_ : 1.0 / last_;
  double log_hi = std::log(hi);
  for (const auto& m : monomials) {
    const double threshold = log_domain_threshold(m.log_depth());
    if (threshold > 0.0) lo = std::max(lo, threshold * (1.0 + 1e-6));
    const auto k = static_cast<double>(m.exp_part().size());
    for (const auto& [beta, alpha] : m.exp_part().terms()) {
      // |alpha| t^beta <= ceiling / k.
      const double cap = (std::log(kExpCeiling) - std::log(k) - log_abs(alpha)) /
                         to_double(beta);
      log_hi = std::min(log_hi, cap);
    }
  }
  hi = std::exp(log_hi);
  if (!(lo < hi)) {
    throw Error(ErrorKind::kDomain,
                "no sample points remain after clamping the grid to the "
                "valid domain");
  }
  if (frame_ == Frame::kInfinity) return SampleGrid(frame_, lo, hi, count_);
  return SampleGrid(frame_, 1.0 / lo, 1.0 / hi, count_);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kInconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

NumericReport verify_order_numeric(const GrowthMonomial& lhs,
                                   const GrowthMonomial& rhs,
                                   const SampleGrid& grid) {
  const GrowthMonomial pair[] = {lhs, rhs};
  const SampleGrid clamped = grid.clamped_for(pair);
  const std::vector<double> ts = clamped.points();

  NumericReport report;
  std::vector<double> deltas;
  deltas.reserve(ts.size());
  for (double t : ts) {
    const double d = delta_log(lhs, rhs, t);
    deltas.push_back(d);
    report.samples.emplace_back(clamped.frame_value(t), d);
  }

  const OrderRelation rel = compare_order(lhs, rhs);
  if (rel.is_same()) {
    const double target = log_abs(rel.ratio);
    bool ok = true;
    for (double d : deltas) {
      const double err = std::abs(d - target);
      report.errors.push_back(err);
      if (!(err < 1e-9)) ok = false;
    }
    report.criterion = "same order: Delta constant at ln|ratio| within 1e-9";
    report.verdict = ok ? Verdict::kPass : Verdict::kFail;
    return report;
  }

  const std::span<const double> tail =
      std::span<const double>(deltas).last(std::min<std::size_t>(5, deltas.size()));
  for (std::size_t i = 1; i < tail.size(); ++i) {
    report.errors.push_back(tail[i] - tail[i - 1]);
  }
  const double mid = deltas[deltas.size() / 2];
  const double last = deltas.back();
  const bool rising = strictly_increasing(tail) && last > mid;
  const bool falling = strictly_decreasing(tail) && last < mid;
  if (rel.kind == OrderRelation::Kind::kGreater) {
    report.criterion =
        "greater: Delta strictly increasing over the last 5 samples and "
        "above its midpoint value";
    report.verdict = rising    ? Verdict::kPass
                     : falling ? Verdict::kFail
                               : Verdict::kInconclusive;
  } else {
    report.criterion =
        "smaller: Delta strictly decreasing over the last 5 samples and "
        "below its midpoint value";
    report.verdict = falling  ? Verdict::kPass
                     : rising ? Verdict::kFail
                              : Verdict::kInconclusive;
  }
  return report;
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int max_depth) {
  // The absolute tolerance is rel_tol times the integral's magnitude, which
  // is refined once from a fixed-panel estimate.
  constexpr int kCoarsePanels = 256;
  const double h = (b - a) / kCoarsePanels;
  double result = 0.0;
  for (int i = 0; i < kCoarsePanels; ++i) {
    const double lo = a + i * h;
    result += h / 6.0 * (f(lo) + 4.0 * f(lo + 0.5 * h) + f(lo + h));
  }
  for (int pass = 0; pass < 2; ++pass) {
    const double scale = std::abs(result);
    if (scale == 0.0) break;
    result = simpson_with_abs_tol(f, a, b, rel_tol * scale, max_depth);
  }
  return result;
}

NumericReport verify_antiderivative_numeric(const Expression& integrand,
                                            const AntiderivativeResult& r,
                                            std::span<const double> xs) {
  std::vector<double> samples(xs.begin(), xs.end());
  for (double x : samples) {
    if (!(x > 0.0 && x <= 0.2)) {
      throw Error(ErrorKind::kDomain,
                  "antiderivative samples must lie in (0, 0.2]");
    }
  }
  std::sort(samples.begin(), samples.end(), std::greater<>());

  const GrowthMonomial& y = integrand.value;
  const GrowthMonomial& f = r.antiderivative;
  const MonomialSum df = differentiate(Expression{Frame::kZeroPlus, f});
  const CompiledMonomial cy(y);
  // F/y and F'/y as exact monomials, so shared factors cancel symbolically.
  const GrowthMonomial f_over_y = divide(f, y);
  const CompiledMonomial cfy(f_over_y);
  const double fy_sign = f_over_y.coeff().sign();
  std::vector<std::pair<double, CompiledMonomial>> dfy;
  for (const auto& term : df.terms()) {
    const GrowthMonomial q = divide(term, y);
    dfy.emplace_back(q.coeff().sign(), CompiledMonomial(q));
  }

  NumericReport report;
  std::vector<double> ratio_dev;
  for (double x : samples) {
    const double t = 1.0 / x;
    double ratio = 0.0;
    for (const auto& [sgn, q] : dfy) ratio += sgn * std::exp(q.eval_log(t));
    ratio_dev.push_back(std::abs(ratio - 1.0));
    report.samples.emplace_back(x, ratio - 1.0);

    // Integrate over s = 1 / (t (1 + v)), v in [0, 9], scaled by y(x) so deep
    // underflow stays representable.
    auto scaled_y = [&](double v) {
      const double w = 1.0 + v;
      return std::exp(cy.log_ratio(t * w, t, std::log1p(v))) / (w * w);
    };
    const double quad = x * adaptive_simpson(scaled_y, 0.0, 9.0, 1e-10, 60);
    const double lower = 10.0 / x;
    const double diff =
        fy_sign * (std::exp(cfy.eval_log(t)) -
                   std::exp(cfy.eval_log(lower) +
                            cy.log_ratio(lower, t, std::log(10.0))));
    report.errors.push_back(std::abs(quad - diff) / std::abs(quad));
  }

  if (r.exact) {
    report.criterion =
        "exact: F'/y = 1 and quadrature over [x/10, x] matches F(x) - F(x/10) "
        "within 1e-8 relative";
    const bool ratio_ok = std::all_of(ratio_dev.begin(), ratio_dev.end(),
                                      [](double d) { return d <= 1e-9; });
    const bool quad_ok = std::all_of(report.errors.begin(), report.errors.end(),
                                     [](double e) { return e <= 1e-8; });
    report.verdict = ratio_ok && quad_ok ? Verdict::kPass : Verdict::kFail;
    return report;
  }

  report.criterion = "asymptotic (" + r.validity +
                     "): |F'/y - 1| and the quadrature discrepancy shrink as "
                     "x decreases";
  if (samples.size() < 2) {
    report.verdict = Verdict::kInconclusive;
    return report;
  }
  report.verdict = shrinking(ratio_dev) && shrinking(report.errors)
                       ? Verdict::kPass
                       : Verdict::kFail;
  return report;
}

}  // namespace growth
