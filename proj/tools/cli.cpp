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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>

#include "growth/calculus.hpp"
#include "growth/error.hpp"
#include "growth/format.hpp"
#include "growth/numeric.hpp"
#include "growth/order.hpp"
#include "growth/parser.hpp"
#include "growth/serialize.hpp"

namespace growth::cli {
namespace {

constexpr const char* kGrammar = R"(Expression syntax:
  expr     := ['-'] pow (('*' | '/') pow)*
  pow      := atom ['^' exponent]       exponent: 2, -2, (1/2), (-3/4)
  atom     := x | integer | u | log(expr) | exp(sum) | (expr)
  sum      := expr (('+' | '-') expr)*
'^' binds tighter than '*' and '/'; a leading minus negates a product.
u = log(1/x) exists only with --at 0+. log accepts x (1/x at 0+) or an
iterated logarithm; exp accepts alpha*x^beta terms (alpha/x^beta at 0+) and
q*log(...) terms, which are rewritten to powers. Rational literals only.

Exit status: 0 success or PASS, 1 FAIL, 2 usage or parse error,
3 E_DOMAIN / E_DIVERGENT / E_PRECONDITION / E_SAME_ORDER / E_ZERO_SUM.)";

// Thrown once a diagnostic has been written.
struct Exit {
  int code;
};

struct Options {
  std::string at = "inf";
  bool json = false;
  int samples = 12;
  double grid_min = 0.0;
  double grid_max = 0.0;
  std::string e1;
  std::string e2;
  std::string case_name;
  std::int64_t n = 0;
  std::string c;
  std::string s;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kGrammar:
    case ErrorKind::kUnsupportedOrder:
    case ErrorKind::kUnknownCase:
      return kUsage;
    default:
      return kMathError;
  }
}

std::string limit_text(const LimitValue& v) {
  switch (v.kind) {
    case LimitValue::Kind::kZero:
      return "zero";
    case LimitValue::Kind::kFinite:
      return "finite " + to_string(v.value);
    case LimitValue::Kind::kInfinite:
      break;
  }
  return v.sign < 0 ? "-infinite" : "infinite";
}

std::string relation_text(const OrderRelation& r) {
  if (r.is_same()) return "same (ratio " + to_string(r.ratio) + ")";
  return relation_name(r.kind);
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

class Session {
 public:
  Session(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err) {
    if (opts.at == "inf") {
      frame_ = Frame::kInfinity;
    } else if (opts.at == "0+") {
      frame_ = Frame::kZeroPlus;
    } else {
      err_ << "error: --at must be 'inf' or '0+'\n";
      throw Exit{kUsage};
    }
  }

  Frame frame() const { return frame_; }

  Expression expr(const std::string& text) const {
    try {
      return parse(text, frame_);
    } catch (const ParseError& e) {
      if (opts_.json) {
        Json j = to_json(e);
        j["error"]["input"] = text;
        out_ << j.dump() << "\n";
      } else {
        err_ << "error[" << error_code(e.kind()) << "]: " << e.what() << "\n"
             << "  " << text << "\n  " << std::string(e.span().begin, ' ')
             << std::string(std::max<std::size_t>(1, e.span().end - e.span().begin), '^')
             << "\n";
      }
      throw Exit{kUsage};
    }
  }

  void emit(const Json& j, const std::string& text) const {
    if (opts_.json) {
      out_ << j.dump() << "\n";
    } else {
      out_ << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    }
  }

  void fail(const Error& e) const {
    if (opts_.json) {
      out_ << to_json(e).dump() << "\n";
    } else {
      err_ << "error[" << error_code(e.kind()) << "]: " << e.what() << "\n";
    }
    throw Exit{exit_code_for(e.kind())};
  }

  const Options& opts() const { return opts_; }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  Frame frame_ = Frame::kInfinity;
};

std::string report_text(const NumericReport& r, const char* column) {
  std::ostringstream os;
  os << verdict_name(r.verdict) << "  " << r.criterion << "\n";
  os << "  " << std::left << std::setw(16) << "x" << column << "\n";
  for (const auto& [x, v] : r.samples) {
    os << "  " << std::left << std::setw(16) << sci(x) << sci(v) << "\n";
  }
  if (!r.errors.empty()) {
    os << "  errors:";
    for (double e : r.errors) os << " " << sci(e);
    os << "\n";
  }
  return os.str();
}

int verdict_exit(const NumericReport& r) {
  return r.verdict == Verdict::kFail ? kVerificationFailed : kOk;
}

Rational rational_arg(const Session& session, const std::string& text,
                      const char* what) {
  auto r = parse_rational(text);
  if (!r) {
    session.fail(Error(ErrorKind::kGrammar,
                       std::string(what) + " must be a rational such as 3 or 1/2, got '" +
                           text + "'"));
  }
  return *r;
}

int dispatch(const std::string& cmd, const Session& s) {
  const Options& o = s.opts();
  if (cmd == "parse") {
    const Expression e = s.expr(o.e1);
    s.emit(to_json(e), pretty(e) + "    " + canonical_notation(e.value) +
                           "    at " + std::string(frame_name(e.frame)));
    return kOk;
  }
  if (cmd == "compare") {
    const Expression a = s.expr(o.e1);
    const Expression b = s.expr(o.e2);
    const OrderRelation r = compare_order(a.value, b.value);
    s.emit(to_json(r), relation_text(r));
    return kOk;
  }
  if (cmd == "limit") {
    const Expression a = s.expr(o.e1);
    const Expression b = s.expr(o.e2);
    const LimitValue v = ratio_limit(a.value, b.value);
    s.emit(to_json(v), limit_text(v));
    return kOk;
  }
  if (cmd == "classify") {
    const Expression e = s.expr(o.e1);
    const std::string c = class_name(classify(e));
    s.emit(Json{{"class", c}}, c);
    return kOk;
  }
  if (cmd == "between") {
    const Expression a = s.expr(o.e1);
    const Expression b = s.expr(o.e2);
    const Expression mid{s.frame(), between(a.value, b.value)};
    s.emit(to_json(mid), pretty(mid));
    return kOk;
  }
  if (cmd == "diff") {
    const Expression e = s.expr(o.e1);
    const MonomialSum d = differentiate(e);
    s.emit(to_json(d, e.frame), pretty(d, e.frame));
    return kOk;
  }
  if (cmd == "lhopital") {
    const Expression p = s.expr(o.e1);
    const Expression q = s.expr(o.e2);
    const LhopitalReport r = lhopital_check(p, q);
    s.emit(to_json(r), std::string(r.consistent ? "consistent" : "INCONSISTENT") +
                           ": direct " + limit_text(r.direct) +
                           ", derivative-based " + limit_text(r.derivative_based));
    return r.consistent ? kOk : kVerificationFailed;
  }
  if (cmd == "integrate") {
    const Expression y = s.expr(o.e1);
    const AntiderivativeResult r = asymptotic_antiderivative(y);
    std::string text = "antiderivative: " + pretty(r.antiderivative, Frame::kZeroPlus) +
                       "\nexact: " + (r.exact ? "yes" : "no") +
                       "\nvalidity: " + r.validity + "\nrectangle: ";
    if (r.rectangle) {
      const RectangleForm f = rectangle_form(r, y);
      text += "area = " + to_string(f.constant) + " * x^" + to_string(f.s) + " * y";
    } else {
      text += "none";
    }
    s.emit(to_json(r, y), text);
    return kOk;
  }
  if (cmd == "solve-area") {
    const Rational c = rational_arg(s, o.c, "c");
    const Rational sv = rational_arg(s, o.s, "s");
    const Expression y = solve_area_equation(c, sv);
    s.emit(to_json(y), pretty(y));
    return kOk;
  }
  if (cmd == "verify-order") {
    const Expression a = s.expr(o.e1);
    const Expression b = s.expr(o.e2);
    double first, last;
    if (s.frame() == Frame::kInfinity) {
      first = o.grid_min > 0 ? o.grid_min : 1e2;
      last = o.grid_max > 0 ? o.grid_max : 1e250;
    } else {
      first = o.grid_max > 0 ? o.grid_max : 1e-2;
      last = o.grid_min > 0 ? o.grid_min : 1e-250;
    }
    const SampleGrid grid = SampleGrid::make(s.frame(), first, last, o.samples);
    const NumericReport r = verify_order_numeric(a.value, b.value, grid);
    s.emit(to_json(r), report_text(r, "Delta"));
    return verdict_exit(r);
  }
  if (cmd == "verify-integral") {
    const Expression y = s.expr(o.e1);
    const AntiderivativeResult ad = asymptotic_antiderivative(y);
    const double hi = o.grid_max > 0 ? o.grid_max : 0.2;
    const double lo = o.grid_min > 0 ? o.grid_min : 1e-6;
    if (!(lo < hi)) {
      s.fail(Error(ErrorKind::kDomain, "--grid-min must be below --grid-max"));
    }
    std::vector<double> xs;
    for (int i = 0; i < o.samples; ++i) {
      xs.push_back(std::exp(std::log(hi) +
                            (std::log(lo) - std::log(hi)) * i / (o.samples - 1)));
    }
    const NumericReport r = verify_antiderivative_numeric(y, ad, xs);
    s.emit(to_json(r), report_text(r, "F'/y - 1"));
    return verdict_exit(r);
  }
  if (cmd == "demo") {
    const DerivationCase c = parse_case(o.case_name);
    std::int64_t n = o.n;
    if (n == 0) {
      n = c == DerivationCase::kLogBelowRoots    ? 1000
          : c == DerivationCase::kExpAbovePowers ? 3
                                                 : 2;
    }
    const DerivationReport r = replay_derivation(c, n);
    std::ostringstream os;
    os << "case " << r.case_id << " (n = " << r.n << ") at "
       << frame_name(r.frame) << "\n";
    os << "p = " << pretty(r.p, r.frame) << "\nq = " << pretty(r.q, r.frame)
       << "\ndp = " << pretty(r.dp, r.frame) << "\ndq = " << pretty(r.dq, r.frame)
       << "\n";
    for (const auto& step : r.steps) {
      os << "  " << step.statement << ":  " << pretty(step.after, r.frame)
         << "   [" << step.justification << "] "
         << (step.verified ? "verified" : "MISMATCH") << "\n";
    }
    os << "note: " << r.note << "\n";
    os << "v = " << pretty(r.final_v, r.frame) << " → " << limit_text(r.verdict)
       << "\n";
    s.emit(to_json(r), os.str());
    return r.all_verified() ? kOk : kVerificationFailed;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Orders of growth of log-exp monomials at infinity and at 0+",
               "growth"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--at", o.at, "Limit point: inf (default) or 0+");
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--samples", o.samples, "Number of numeric samples (>= 8)")
      ->check(CLI::Range(SampleGrid::kMinCount, 1000000));
  app.add_option("--grid-min", o.grid_min,
                 "Smallest grid value (t at inf, x at 0+)");
  app.add_option("--grid-max", o.grid_max,
                 "Largest grid value (t at inf, x at 0+)");

  auto one = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("E", o.e1, "Expression")->required();
    return sub;
  };
  auto two = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("E1", o.e1, "First expression")->required();
    sub->add_option("E2", o.e2, "Second expression")->required();
    return sub;
  };
  one("parse", "Print the canonical form");
  two("compare", "Order relation of E1 to E2");
  two("limit", "Limit of E1/E2 at the frame point");
  one("classify", "Class 1 (powers), 2 (logarithms) or 3 (exponentials)");
  two("between", "An order strictly between E1 and E2");
  one("diff", "Derivative with respect to x");
  two("lhopital", "Check L'Hopital's rule on E1/E2");
  one("integrate", "Asymptotic antiderivative near 0+");
  auto* solve = app.add_subcommand(
      "solve-area", "Curve whose area near 0+ is c * x^s * y");
  solve->add_option("c", o.c, "Rational c > 0")->required();
  solve->add_option("s", o.s, "Rational s > 1")->required();
  two("verify-order", "Numerically confirm compare E1 E2");
  one("verify-integral", "Numerically confirm integrate E");
  auto* demo = app.add_subcommand("demo", "Replay a ratio-limit derivation");
  demo->add_option("CASE", o.case_name, "E507-9, E507-16 or E507-21")->required();
  demo->add_option("--n", o.n, "Positive integer parameter")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("growth");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    Session session(o, out, err);
    try {
      return dispatch(cmd, session);
    } catch (const Error& e) {
      session.fail(e);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kOk;
}

}  // namespace growth::cli
