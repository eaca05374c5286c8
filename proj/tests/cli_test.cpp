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


#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace growth::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args, int expected_code = kOk) {
  args.insert(args.begin(), "--json");
  const Outcome o = invoke(std::move(args));
  EXPECT_EQ(o.code, expected_code) << o.out << o.err;
  const std::string& text = o.out.empty() ? o.err : o.out;
  return nlohmann::json::parse(text);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

TEST(Cli, CompareLogAgainstRoot) {
  const Outcome o = invoke({"compare", "log(x)", "x^(1/1000)"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "smaller\n");
  EXPECT_EQ(json_of({"compare", "2*x", "3*x"}),
            nlohmann::json::parse(R"({"relation":"same","ratio":{"num":2,"den":3}})"));
}

TEST(Cli, IntegrateExactCase) {
  const nlohmann::json j = json_of({"integrate", "x^-2 * exp(-1/x)", "--at", "0+"});
  EXPECT_EQ(j["antiderivative"], "exp(-1/x)");
  EXPECT_EQ(j["rectangle"]["s"], 2);
  EXPECT_EQ(j["rectangle"]["const"], 1);
  EXPECT_EQ(j["exact"], true);
}

TEST(Cli, IntegratePowerTimesU) {
  const nlohmann::json j = json_of({"integrate", "x*u", "--at", "0+"});
  EXPECT_EQ(j["antiderivative"], "x^2*u/2");
  EXPECT_EQ(j["rectangle"]["const"], "1/2");
  EXPECT_EQ(j["exact"], false);
}

TEST(Cli, DemoTranscriptEnding) {
  const Outcome o = invoke({"demo", "E507-21", "--n", "2"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_TRUE(ends_with(o.out, "v = x^2/2 → zero\n")) << o.out;
  const nlohmann::json j = json_of({"demo", "E507-9"});
  EXPECT_EQ(j["n"], 1000);
  EXPECT_EQ(j["final_v"]["pretty"], "x^(1/1000)/1000");
}

TEST(Cli, ExitCodes) {
  Outcome o = invoke({"compare", "u", "x"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("E_DOMAIN"), std::string::npos) << o.err;
  EXPECT_EQ(invoke({"compare", "x+"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"demo", "E507-99"}).code, kUsage);
  EXPECT_EQ(invoke({"between", "x", "2*x"}).code, kMathError);
  EXPECT_EQ(invoke({"integrate", "x^-3", "--at", "0+"}).code, kMathError);
  EXPECT_EQ(invoke({"integrate", "x^2"}).code, kMathError);
  EXPECT_EQ(invoke({"solve-area", "1", "1"}).code, kMathError);
  EXPECT_EQ(invoke({"lhopital", "x", "x^-1"}).code, kMathError);
  EXPECT_EQ(invoke({"verify-order", "log(log(log(x)))", "log(log(x))",
                    "--grid-min", "1e10", "--grid-max", "1e12"})
                .code,
            kOk);
}

TEST(Cli, ErrorJsonCarriesSpan) {
  const nlohmann::json j = json_of({"compare", "x", "x^2 * y"}, kUsage);
  EXPECT_EQ(j["error"]["kind"], "E_GRAMMAR");
  EXPECT_EQ(j["error"]["span"], nlohmann::json::parse("[6,7]"));
}

TEST(Cli, SubcommandsProduceDocumentedShapes) {
  EXPECT_EQ(json_of({"limit", "exp(2*x)", "exp(x)"})["limit"], "infinite");
  EXPECT_EQ(json_of({"classify", "x^2*u", "--at", "0+"})["class"], "class2");
  EXPECT_EQ(json_of({"between", "x", "x^2"})["pretty"], "x^(3/2)");
  EXPECT_EQ(json_of({"diff", "x*u", "--at", "0+"})["terms"].size(), 2u);
  EXPECT_EQ(json_of({"solve-area", "1", "3"})["pretty"], "x^-3*exp(-1/(2*x^2))");
  EXPECT_EQ(json_of({"lhopital", "x^2", "u^-1", "--at", "0+"})["consistent"], true);
  EXPECT_EQ(json_of({"parse", "log(x)^2/x"})["canonical"], "[1; {}; -1; (2)]");
}

TEST(Cli, VerificationVerdictsAgreeAcrossFormats) {
  const std::vector<std::string> order{"verify-order", "exp(x)", "x^1000",
                                       "--grid-min", "100", "--grid-max", "10000"};
  const Outcome text = invoke(order);
  EXPECT_EQ(text.code, kOk);
  EXPECT_EQ(text.out.rfind("PASS", 0), 0u) << text.out;
  EXPECT_EQ(json_of(order)["verdict"], "PASS");

  const std::vector<std::string> integral{"verify-integral", "x^-2*exp(-1/x)", "--at", "0+"};
  EXPECT_EQ(invoke(integral).out.rfind("PASS", 0), 0u);
  EXPECT_EQ(json_of(integral)["verdict"], "PASS");
}

TEST(Cli, ReversedGridIsDomainError) {
  const Outcome o = invoke({"verify-order", "x", "x^2", "--grid-min", "1e5",
                            "--grid-max", "1e2"});
  EXPECT_EQ(o.code, kMathError);
}

}  // namespace
}  // namespace growth::cli
