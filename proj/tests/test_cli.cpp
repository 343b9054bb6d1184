// Copyright 2026 The lpcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "lpcoh/cli/algebra_file.hpp"
#include "lpcoh/cli/catalog.hpp"
#include "lpcoh/cli/report.hpp"
#include "oracles.hpp"

using namespace lpcoh;
using namespace lpcoh::cli;

namespace {

int runTool(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LPCOH_TOOL_PATH + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string captureTool(const std::string& args, const std::string& env = "") {
  const auto out = std::filesystem::temp_directory_path() / "lpcoh_cli_capture.txt";
  const std::string cmd = env + " " + LPCOH_TOOL_PATH + " " + args + " > " + out.string() + " 2>/dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0) << cmd;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& rel) { return std::string(LPCOH_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(AlgebraFile, ParsesAndFillsMirrors) {
  const AlgebraFile f = parseAlgebraFile(R"({
    "name": "aff", "dim": 2, "basis": ["x", "xi"],
    "brackets": [{"i": 2, "j": 1, "k": 1, "coef": "1"}],
    "expected": {"verdict": "Heintze", "exponent": "1"}
  })");
  EXPECT_EQ(f.expectedVerdict, Verdict::Heintze);
  EXPECT_EQ(f.expectedExponent, Rational(1));
  EXPECT_EQ(toLieAlgebra(f), models::aff());
  EXPECT_EQ(parseAlgebraFile(serializeAlgebraFile(f)), f);
}

TEST(AlgebraFile, AcceptsIntegerCoefficientsAndDefaultBasis) {
  const AlgebraFile f = parseAlgebraFile(R"({"name": "h", "dim": 3, "brackets": [{"i":1,"j":2,"k":3,"coef":2}]})");
  EXPECT_EQ(f.basis, (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(f.brackets.front().coef, Rational(2));
}

TEST(AlgebraFile, ParseErrors) {
  const char* bad[] = {
      "{not json",
      R"({"dim": 2, "brackets": []})",
      R"({"name": "a", "dim": 0, "brackets": []})",
      R"({"name": "a", "dim": 2, "brackets": [{"i":1,"j":3,"k":1,"coef":"1"}]})",
      R"({"name": "a", "dim": 2, "brackets": [{"i":1,"j":2,"k":1,"coef":"0.5"}]})",
      R"({"name": "a", "dim": 2, "brackets": [{"i":1,"j":2,"k":1,"coef":1.5}]})",
      R"({"name": "a", "dim": 2, "brackets": [{"i":1,"j":2,"k":1,"coef":"1"},{"i":1,"j":2,"k":1,"coef":"2"}]})",
      R"({"name": "a", "dim": 2, "basis": ["x"], "brackets": []})",
      R"({"name": "a", "dim": 2, "brackets": [], "expected": {"verdict": "Hyperbolic"}})",
  };
  for (const char* text : bad) EXPECT_THROW(parseAlgebraFile(text), ParseError) << text;
  EXPECT_THROW(loadAlgebraFile("/nonexistent/file.json"), ParseError);
}

TEST(AlgebraFile, ContradictoryMirrorIsLeftForValidation) {
  const AlgebraFile f = parseAlgebraFile(
      R"({"name": "a", "dim": 2, "brackets": [{"i":1,"j":2,"k":1,"coef":"1"},{"i":2,"j":1,"k":1,"coef":"1"}]})");
  EXPECT_FALSE(validate(toLieAlgebra(f)).ok());
}

TEST(Catalog, RegressionAgainstExpectations) {
  ASSERT_GE(catalog().size(), 12U);
  for (const auto& e : catalog()) {
    const Classification c = classify(e.algebra);
    EXPECT_EQ(c.verdict, e.expected) << e.name;
    if (e.expectedExponent) {
      ASSERT_TRUE(c.exponent) << e.name;
      EXPECT_EQ(*c.exponent, (RationalInterval{*e.expectedExponent, *e.expectedExponent})) << e.name;
    }
  }
  EXPECT_LPCOH_ERROR(catalogEntry("nope"), ErrorCode::InvalidArgument);
}

TEST(Catalog, ShippedFilesMatchBuiltins) {
  for (const auto& e : catalog()) {
    EXPECT_EQ(loadAlgebraFile(data("algebras/" + e.name + ".json")), toAlgebraFile(e)) << e.name;
  }
}

TEST(Report, RoundTripsForWholeCatalog) {
  for (const auto& e : catalog()) {
    const AlgebraFile f = toAlgebraFile(e);
    Report r = makeReport(f, defaultTolerance(), classify(toLieAlgebra(f)));
    EXPECT_EQ(reportFromJson(toJson(r)), r) << e.name;
    r.timingSeconds = 0.1234567890123;
    EXPECT_EQ(reportFromJson(toJson(r)), r) << e.name;
  }
  const RatPolynomial p{Rational(1), Rational(-4), Rational(1)};
  Report irr = makeReport(fromLieAlgebra("irr", models::semidirect(RatMatrix{{0, 1}, {-1, 4}})), pow2(-20),
                          classify(models::semidirect(RatMatrix{{0, 1}, {-1, 4}}), pow2(-20)));
  EXPECT_FALSE(irr.classification.exponent->isPoint());
  EXPECT_EQ(reportFromJson(toJson(irr)), irr);
}

TEST(Report, RejectsForeignSchema) {
  const Report r = makeReport(toAlgebraFile(catalogEntry("aff")), defaultTolerance(), classify(models::aff()));
  std::string json = toJson(r);
  json.replace(json.find("lpcoh.report/1"), 14, "lpcoh.report/9");
  EXPECT_THROW(reportFromJson(json), ParseError);
}

TEST(Report, TextAndJsonCarrySameExactValues) {
  for (const auto& e : catalog()) {
    const AlgebraFile f = toAlgebraFile(e);
    const Report r = makeReport(f, defaultTolerance(), classify(toLieAlgebra(f)));
    const std::string json = toJson(r);
    const std::string text = toText(r);
    const std::regex token(R"re("(-?[0-9]+(/[0-9]+)?)")re");
    for (auto it = std::sregex_iterator(json.begin(), json.end(), token); it != std::sregex_iterator(); ++it) {
      EXPECT_NE(text.find((*it)[1].str()), std::string::npos) << e.name << ": " << (*it)[1].str();
    }
  }
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(runTool("classify " + data("algebras/aff.json")), 0);
  EXPECT_EQ(runTool("validate " + data("algebras/heisenberg.json")), 0);
  EXPECT_EQ(runTool("exponent " + data("algebras/heisenberg.json")), 5);
  EXPECT_EQ(runTool("classify " + data("algebras/sl2.json")), 2);
  EXPECT_EQ(runTool("classify " + data("invalid/broken-jacobi.json")), 3);
  EXPECT_EQ(runTool("validate " + data("invalid/broken-jacobi.json")), 3);
  EXPECT_EQ(runTool("classify " + data("invalid/bad-index.json")), 4);
  EXPECT_EQ(runTool("classify /nonexistent.json"), 4);
  EXPECT_EQ(runTool("catalog --check"), 0);
}

TEST(Tool, ClassifyOutputs) {
  const std::string aff = captureTool("classify --format json " + data("algebras/aff.json"));
  const Report r = reportFromJson(aff);
  EXPECT_EQ(r.classification.verdict, Verdict::Heintze);
  EXPECT_EQ(*r.classification.exponent, (RationalInterval{1, 1}));
  EXPECT_EQ(captureTool("exponent " + data("algebras/ch3.json")), "[6, 6]\n");
  EXPECT_NE(captureTool("classify " + data("algebras/heisenberg.json")).find("verdict: ClosedAtInfinity"),
            std::string::npos);
}

TEST(Tool, ToleranceFromEnvironment) {
  const std::string out = captureTool("classify --format json " + data("algebras/spiral.json"), "LPCOH_TOL=1/1024");
  EXPECT_EQ(reportFromJson(out).tolerance, Rational(1, 1024));
  const std::string flag =
      captureTool("classify --tol 1/8 --format json " + data("algebras/spiral.json"), "LPCOH_TOL=1/1024");
  EXPECT_EQ(reportFromJson(flag).tolerance, Rational(1, 8));
}
