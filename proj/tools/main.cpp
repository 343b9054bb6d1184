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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpcoh/cli/algebra_file.hpp"
#include "lpcoh/cli/catalog.hpp"
#include "lpcoh/cli/report.hpp"
#include "lpcoh/lpcoh.hpp"

namespace {

using namespace lpcoh;
using namespace lpcoh::cli;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kNotSolvable = 2;
constexpr int kInvalidAlgebra = 3;
constexpr int kParseError = 4;
constexpr int kWrongVerdict = 5;

std::string fmt(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Rational resolveTolerance(const std::string& flag) {
  if (!flag.empty()) return parseRational(flag);
  if (const char* env = std::getenv("LPCOH_TOL"); env && *env) return parseRational(env);
  return defaultTolerance();
}

std::vector<std::string> splitList(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int exitFor(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  switch (e.code()) {
    case ErrorCode::NotSolvable: return kNotSolvable;
    case ErrorCode::InvalidAlgebra: return kInvalidAlgebra;
    default: return kFailure;
  }
}

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + outPath + "'");
  out << text;
}

int cmdValidate(const std::string& path) {
  const AlgebraFile f = loadAlgebraFile(path);
  const ValidationReport r = validate(toLieAlgebra(f));
  if (r.ok()) {
    std::cout << f.name << ": ok (antisymmetry and Jacobi hold)\n";
    return kOk;
  }
  std::cout << f.name << ": " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) {
    if (v.kind == IdentityViolation::Kind::Antisymmetry) {
      std::cout << "  antisymmetry (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1
                << "): c_ijk + c_jik = " << toString(v.residual) << "\n";
    } else {
      std::cout << "  jacobi (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << ") component " << v.l + 1
                << ": " << toString(v.residual) << "\n";
    }
  }
  return kInvalidAlgebra;
}

int cmdClassify(const std::string& path, const std::string& tolFlag, const std::string& format, bool timing,
                const std::string& outPath) {
  const AlgebraFile f = loadAlgebraFile(path);
  const Rational tol = resolveTolerance(tolFlag);
  const auto t0 = std::chrono::steady_clock::now();
  const Classification c = classify(toLieAlgebra(f), tol);
  Report r = makeReport(f, tol, c);
  if (timing) r.timingSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(format == "json" ? toJson(r) : toText(r), outPath);
  return kOk;
}

int cmdExponent(const std::string& path, const std::string& tolFlag) {
  const AlgebraFile f = loadAlgebraFile(path);
  const Classification c = classify(toLieAlgebra(f), resolveTolerance(tolFlag));
  if (c.verdict != Verdict::Heintze) {
    std::cerr << "error: verdict is " << to_string(c.verdict) << ", the critical exponent needs Heintze\n";
    return kWrongVerdict;
  }
  std::cout << "[" << toString(c.exponent->lo) << ", " << toString(c.exponent->hi) << "]\n";
  return kOk;
}

int cmdVerifyThreshold(const std::string& weightsFlag, const std::string& pFlag, const std::string& scanFlag,
                       std::optional<double> cutoff, std::size_t resolution) {
  std::vector<Rational> weights;
  for (const auto& w : splitList(weightsFlag, ',')) weights.push_back(parseRational(w));
  const HeintzeModel model(weights);
  std::vector<Rational> ps;
  if (!pFlag.empty()) ps.push_back(parseRational(pFlag));
  if (!scanFlag.empty()) {
    const auto parts = splitList(scanFlag, ':');
    if (parts.size() != 3) fail(ErrorCode::InvalidArgument, "--scan expects lo:hi:step");
    const Rational lo = parseRational(parts[0]);
    const Rational hi = parseRational(parts[1]);
    const Rational step = parseRational(parts[2]);
    if (step <= 0 || lo > hi) fail(ErrorCode::InvalidArgument, "--scan needs lo <= hi and step > 0");
    for (Rational p = lo; p <= hi; p += step) ps.push_back(p);
  }
  if (ps.empty()) fail(ErrorCode::InvalidArgument, "give --p or --scan");

  std::cout << "weights:";
  for (const auto& w : model.weights()) std::cout << " " << toString(w);
  std::cout << "\ntau: " << toString(model.tau()) << "\ncritical exponent: " << toString(model.criticalExponent())
            << "\n";
  std::cout << "p\tverdict\trate\tQ(T)\tQ(2T)\tratio\tmeasured\tagree\n";
  ThresholdOptions opt;
  opt.cutoff = cutoff;
  opt.resolution = resolution;
  bool all = true;
  for (const auto& p : ps) {
    const ThresholdCheck c = verifyThreshold(model, p, opt);
    all = all && c.numericsAgree;
    std::cout << toString(p) << "\t" << to_string(c.rates.verdict) << "\t" << toString(c.rates.dominantRate) << "\t"
              << fmt(c.normAtCutoff) << "\t" << fmt(c.normAtDoubleCutoff) << "\t" << fmt(c.growthRatio) << "\t"
              << fmt(c.measuredRate, 6) << "\t" << (c.numericsAgree ? "yes" : "NO") << "\n";
  }
  return all ? kOk : kFailure;
}

int cmdCheeger(const std::string& modelName, const std::string& radiiFlag, double p) {
  std::vector<int> radii;
  for (const auto& r : splitList(radiiFlag, ',')) radii.push_back(std::stoi(r));
  const DichotomyScan scan = dichotomyScan(BallModel::parse(modelName), radii, p);
  std::cout << "model: " << scan.model << "\np: " << fmt(scan.p) << "\n";
  std::cout << "radius\tvertices\tinterior\tcheeger_lo\tcheeger_hi\tcheeger_method\tsobolev_lo\tsobolev_hi\t"
               "sobolev_method\n";
  for (const auto& row : scan.rows) {
    std::cout << row.radius << "\t" << row.vertices << "\t" << row.interior << "\t"
              << fmt(row.cheeger.estimate.lowerBound) << "\t" << fmt(row.cheeger.estimate.upperBound) << "\t"
              << to_string(row.cheeger.estimate.method) << "\t" << fmt(row.sobolev.lowerBound) << "\t"
              << fmt(row.sobolev.upperBound) << "\t" << to_string(row.sobolev.method) << "\n";
  }
  std::cout << "trend: " << to_string(scan.trend) << " (monotone " << (scan.monotoneDecreasing ? "yes" : "no")
            << ", decay ratio " << fmt(scan.decayRatio, 6) << ", min lower bound " << fmt(scan.minLowerBound, 6)
            << ")\n";
  return kOk;
}

int cmdCatalog(const std::string& format, const std::string& exportDir, bool check) {
  int status = kOk;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : catalog()) {
    std::string computed;
    if (check) {
      const Classification c = classify(e.algebra);
      const bool match = c.verdict == e.expected &&
                         (!e.expectedExponent || (c.exponent && c.exponent->isPoint() &&
                                                  c.exponent->lo == *e.expectedExponent));
      if (!match) status = kFailure;
      computed = std::string(to_string(c.verdict)) + (match ? " ok" : " MISMATCH");
    }
    if (!exportDir.empty()) {
      std::filesystem::create_directories(exportDir);
      emit(serializeAlgebraFile(toAlgebraFile(e)), exportDir + "/" + e.name + ".json");
    }
    const std::string exponent = e.expectedExponent ? toString(*e.expectedExponent) : "-";
    if (format == "json") {
      nlohmann::json item = {{"name", e.name},
                             {"dim", e.algebra.dim()},
                             {"expected", std::string(to_string(e.expected))},
                             {"exponent", e.expectedExponent ? nlohmann::json(exponent) : nlohmann::json(nullptr)},
                             {"description", e.description}};
      if (check) item["computed"] = computed;
      list.push_back(std::move(item));
    } else {
      std::cout << e.name << "\t" << e.algebra.dim() << "\t" << to_string(e.expected) << "\t" << exponent << "\t"
                << e.description << (check ? "\t" + computed : "") << "\n";
    }
  }
  if (format == "json") std::cout << list.dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpcoh: first L^p-cohomology of solvable Lie groups"};
  app.require_subcommand(1);

  std::string path, tol, format = "text", out;
  bool timing = false;

  auto* validateCmd = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
  validateCmd->add_option("path", path, "algebra JSON file")->required();

  auto* classifyCmd = app.add_subcommand("classify", "three-way verdict and exponent report");
  classifyCmd->add_option("path", path, "algebra JSON file")->required();
  classifyCmd->add_option("--tol", tol, "interval width for the exponent (rational; default LPCOH_TOL or 2^-64)");
  classifyCmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  classifyCmd->add_flag("--timing", timing, "include wall-clock time (breaks bit-identical output)");
  classifyCmd->add_option("-o,--output", out, "write the report to a file");

  auto* exponentCmd = app.add_subcommand("exponent", "critical exponent interval of a Heintze algebra");
  exponentCmd->add_option("path", path, "algebra JSON file")->required();
  exponentCmd->add_option("--tol", tol, "interval width (rational)");

  std::string weights, pValue, scan;
  std::optional<double> cutoff;
  std::size_t resolution = 64;
  auto* thresholdCmd = app.add_subcommand("verify-threshold", "rate analysis and quadrature on a diagonal model");
  thresholdCmd->add_option("--weights", weights, "comma-separated positive rationals")->required();
  auto* pOpt = thresholdCmd->add_option("--p", pValue, "single exponent");
  auto* scanOpt = thresholdCmd->add_option("--scan", scan, "lo:hi:step");
  pOpt->excludes(scanOpt);
  thresholdCmd->add_option("--cutoff", cutoff, "quadrature cutoff T (default 10)");
  thresholdCmd->add_option("--resolution", resolution, "nodes per axis (>= 16)");

  std::string modelName = "grid2", radii = "2,3,4,5,6";
  double p = 1.0;
  auto* cheegerCmd = app.add_subcommand("cheeger", "isoperimetric and Sobolev constants of word balls");
  cheegerCmd->add_option("--model", modelName, "grid<d>, sol, heisenberg, tree<k>");
  cheegerCmd->add_option("--radii", radii, "comma-separated increasing radii");
  cheegerCmd->add_option("--p", p, "Sobolev exponent (>= 1)");

  std::string exportDir;
  bool check = false;
  auto* catalogCmd = app.add_subcommand("catalog", "built-in algebras and expected verdicts");
  catalogCmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  catalogCmd->add_option("--export", exportDir, "write each entry as an algebra file into this directory");
  catalogCmd->add_flag("--check", check, "classify every entry and compare with the expectation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*validateCmd) return cmdValidate(path);
    if (*classifyCmd) return cmdClassify(path, tol, format, timing, out);
    if (*exponentCmd) return cmdExponent(path, tol);
    if (*thresholdCmd) return cmdVerifyThreshold(weights, pValue, scan, cutoff, resolution);
    if (*cheegerCmd) return cmdCheeger(modelName, radii, p);
    if (*catalogCmd) return cmdCatalog(format, exportDir, check);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    return exitFor(e);
  }
  return kFailure;
}
