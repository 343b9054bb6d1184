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

#include "lpcoh/cli/report.hpp"

#include <sstream>

#include <json.hpp>

#include "json_util.hpp"

namespace lpcoh::cli {

using nlohmann::json;

namespace {

json vecJson(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(toString(x));
  return a;
}

RatVector vecFrom(const json& a, const std::string& what) {
  if (!a.is_array()) throw ParseError(what + " must be an array");
  RatVector v;
  for (const auto& x : a) v.push_back(detail::asRational(x, what));
  return v;
}

json intervalJson(const RationalInterval& r) { return {{"lo", toString(r.lo)}, {"hi", toString(r.hi)}}; }

RationalInterval intervalFrom(const json& j) {
  return {detail::rationalField(j, "lo"), detail::rationalField(j, "hi")};
}

std::string endpointString(const RangeEndpoint& e) { return e.toString(); }

RangeEndpoint endpointFrom(const json& j, const char* key) {
  const std::string s = detail::requireString(j, key);
  if (s == "pcrit") return RangeEndpoint::critical();
  if (s == "inf") return RangeEndpoint::infinity();
  return RangeEndpoint::number(detail::asRational(json(s), key));
}

CohomologySpace spaceFrom(const std::string& s) {
  for (auto c : {CohomologySpace::Torsion, CohomologySpace::Reduced, CohomologySpace::Full}) {
    if (s == to_string(c)) return c;
  }
  throw ParseError("unknown cohomology space '" + s + "'");
}

bool boolField(const json& j, const char* key) {
  const json& v = detail::require(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("field '") + key + "' must be boolean");
  return v.get<bool>();
}

std::size_t countField(const json& j, const char* key) {
  const json& v = detail::require(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a count");
  return v.get<std::size_t>();
}

json classificationJson(const Classification& c) {
  json out = json::object();
  out["verdict"] = std::string(to_string(c.verdict));
  out["exponent"] = c.exponent ? intervalJson(*c.exponent) : json(nullptr);
  json st = json::array();
  for (const auto& s : c.statements) {
    st.push_back({{"space", std::string(to_string(s.space))},
                  {"from", endpointString(s.from)},
                  {"fromInclusive", s.fromInclusive},
                  {"to", endpointString(s.to)},
                  {"toInclusive", s.toInclusive},
                  {"vanishes", s.vanishes},
                  {"citation", s.citation}});
  }
  out["statements"] = std::move(st);
  return out;
}

json spectralJson(const Provenance& p) {
  json out = json::object();
  out["tauZero"] = p.tauZero;
  out["tau"] = vecJson(p.tau);
  out["xi0"] = p.xi0 ? vecJson(*p.xi0) : json(nullptr);
  out["kernelDim"] = p.kernelDim ? json(*p.kernelDim) : json(nullptr);
  out["kernelNilpotent"] = p.kernelNilpotent ? json(*p.kernelNilpotent) : json(nullptr);
  out["charPoly"] = p.charPoly ? vecJson(p.charPoly->coefficients()) : json(nullptr);
  if (p.realParts) {
    const auto& r = *p.realParts;
    out["realParts"] = {{"positive", r.countPositive},
                        {"zero", r.countZero},
                        {"negative", r.countNegative},
                        {"minPositive", r.minPositiveRealPart ? intervalJson(*r.minPositiveRealPart) : json(nullptr)},
                        {"sum", toString(r.sumRealParts)}};
  } else {
    out["realParts"] = nullptr;
  }
  return out;
}

Provenance provenanceFrom(const json& j) {
  Provenance p;
  p.tauZero = boolField(j, "tauZero");
  p.tau = vecFrom(detail::require(j, "tau"), "tau");
  if (!detail::require(j, "xi0").is_null()) p.xi0 = vecFrom(j["xi0"], "xi0");
  if (!detail::require(j, "kernelDim").is_null()) p.kernelDim = countField(j, "kernelDim");
  if (!detail::require(j, "kernelNilpotent").is_null()) p.kernelNilpotent = boolField(j, "kernelNilpotent");
  if (!detail::require(j, "charPoly").is_null()) p.charPoly = RatPolynomial(vecFrom(j["charPoly"], "charPoly"));
  const json& r = detail::require(j, "realParts");
  if (!r.is_null()) {
    RealPartReport rp;
    rp.countPositive = countField(r, "positive");
    rp.countZero = countField(r, "zero");
    rp.countNegative = countField(r, "negative");
    if (!detail::require(r, "minPositive").is_null()) rp.minPositiveRealPart = intervalFrom(r["minPositive"]);
    rp.sumRealParts = detail::rationalField(r, "sum");
    p.realParts = rp;
  }
  return p;
}

AlgebraFile inputFrom(const json& j) { return parseAlgebraFile(j.dump()); }

std::string range(const CohomologyStatement& s) {
  return std::string(s.fromInclusive ? "[" : "(") + s.from.toString() + ", " + s.to.toString() +
         (s.toInclusive ? "]" : ")");
}

std::string vecText(const RatVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + toString(v[i]);
  return s + "]";
}

}  // namespace

Report makeReport(const AlgebraFile& input, const Rational& tolerance, const Classification& c) {
  Report r;
  r.input = input;
  r.tolerance = tolerance;
  r.classification = c;
  return r;
}

std::string toJson(const Report& r) {
  json doc = json::object();
  doc["schema"] = r.schema;
  doc["toolVersion"] = r.toolVersion;
  doc["input"] = detail::algebraFileJson(r.input);
  doc["tolerance"] = toString(r.tolerance);
  doc["classification"] = classificationJson(r.classification);
  doc["spectral"] = spectralJson(r.classification.provenance);
  if (r.timingSeconds) doc["timing"] = {{"seconds", *r.timingSeconds}};
  return doc.dump(2) + "\n";
}

Report reportFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  Report r;
  r.schema = detail::requireString(doc, "schema");
  if (r.schema != kReportSchema) throw ParseError("unsupported schema '" + r.schema + "'");
  r.toolVersion = detail::requireString(doc, "toolVersion");
  r.input = inputFrom(detail::require(doc, "input"));
  r.tolerance = detail::rationalField(doc, "tolerance");
  const json& c = detail::require(doc, "classification");
  try {
    r.classification.verdict = parseVerdict(detail::requireString(c, "verdict"));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  if (!detail::require(c, "exponent").is_null()) r.classification.exponent = intervalFrom(c["exponent"]);
  const json& st = detail::require(c, "statements");
  if (!st.is_array()) throw ParseError("'statements' must be an array");
  for (const auto& s : st) {
    CohomologyStatement cs;
    cs.space = spaceFrom(detail::requireString(s, "space"));
    cs.from = endpointFrom(s, "from");
    cs.fromInclusive = boolField(s, "fromInclusive");
    cs.to = endpointFrom(s, "to");
    cs.toInclusive = boolField(s, "toInclusive");
    cs.vanishes = boolField(s, "vanishes");
    cs.citation = detail::requireString(s, "citation");
    r.classification.statements.push_back(std::move(cs));
  }
  r.classification.provenance = provenanceFrom(detail::require(doc, "spectral"));
  if (doc.contains("timing")) {
    const json& t = detail::require(doc["timing"], "seconds");
    if (!t.is_number()) throw ParseError("timing.seconds must be a number");
    r.timingSeconds = t.get<double>();
  }
  return r;
}

std::string toText(const Report& r) {
  std::ostringstream os;
  const Classification& c = r.classification;
  const Provenance& p = c.provenance;
  os << "schema: " << r.schema << "\n";
  os << "tool version: " << r.toolVersion << "\n";
  os << "algebra: " << r.input.name << " (dim " << r.input.dim << ")\n";
  os << "basis: ";
  for (std::size_t i = 0; i < r.input.basis.size(); ++i) os << (i ? ", " : "") << r.input.basis[i];
  os << "\n";
  for (const auto& e : r.input.brackets) {
    os << "bracket: [" << r.input.basis[e.i - 1] << ", " << r.input.basis[e.j - 1] << "] += " << toString(e.coef)
       << " " << r.input.basis[e.k - 1] << "  (" << e.i << "," << e.j << "," << e.k << ")\n";
  }
  if (r.input.expectedVerdict) os << "expected verdict: " << to_string(*r.input.expectedVerdict) << "\n";
  if (r.input.expectedExponent) os << "expected exponent: " << toString(*r.input.expectedExponent) << "\n";
  os << "tolerance: " << toString(r.tolerance) << "\n";
  os << "verdict: " << to_string(c.verdict) << "\n";
  if (c.exponent) os << "exponent: [" << toString(c.exponent->lo) << ", " << toString(c.exponent->hi) << "]\n";
  for (const auto& s : c.statements) {
    os << "statement: " << to_string(s.space) << "^{1,p} " << (s.vanishes ? "= 0" : "!= 0") << " for p in "
       << range(s);
    if (!s.citation.empty()) os << "  [cited: " << s.citation << "]";
    os << "\n";
  }
  os << "tau: " << vecText(p.tau) << (p.tauZero ? " (unimodular)" : "") << "\n";
  if (p.xi0) os << "xi0: " << vecText(*p.xi0) << "\n";
  if (p.kernelDim) os << "ker tau: dim " << *p.kernelDim << "\n";
  if (p.kernelNilpotent) os << "ker tau nilpotent: " << (*p.kernelNilpotent ? "yes" : "no") << "\n";
  if (p.charPoly) os << "charpoly (ascending): " << vecText(p.charPoly->coefficients()) << "\n";
  if (p.realParts) {
    const auto& rp = *p.realParts;
    os << "real parts: " << rp.countPositive << " positive, " << rp.countZero << " zero, " << rp.countNegative
       << " negative\n";
    os << "sum of real parts: " << toString(rp.sumRealParts) << "\n";
    if (rp.minPositiveRealPart) {
      os << "min real part: [" << toString(rp.minPositiveRealPart->lo) << ", "
         << toString(rp.minPositiveRealPart->hi) << "]\n";
    }
  }
  if (r.timingSeconds) os << "timing: " << *r.timingSeconds << " s\n";
  return os.str();
}

}  // namespace lpcoh::cli
